#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support/properties.hpp"

#include <doctest.h>

namespace {

void run(props::Result (*property)())
{
    const auto r = property();
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.cases >= props::kCases);
    CHECK(r.failures == 0);
}

} // namespace

TEST_CASE("prime form is constant on orbits") { run(props::prime_form_orbit_constancy); }
TEST_CASE("reflect is an involution") { run(props::reflect_involution); }
TEST_CASE("transpose is additive") { run(props::transpose_additivity); }
TEST_CASE("orbit size divides n") { run(props::orbit_size_divides_n); }
TEST_CASE("non-invariant class count is even") { run(props::nu_N_even); }
TEST_CASE("conjugate point is a bijection onto decreasing tuples") { run(props::conjugate_point_bijection); }
TEST_CASE("compositions total 2^(L-1)") { run(props::composition_total); }
TEST_CASE("palindrome locus points are palindromes") { run(props::palindrome_locus_points); }
TEST_CASE("opposite face orthocentres align") { run(props::orthocentre_alignment_opposite_faces); }
