#include "../support/oracles.hpp"

#include <chordenum/orbits.hpp>

#include <algorithm>
#include <doctest.h>

using namespace chordenum;

namespace {

const Orbit& orbit_of(const std::vector<Orbit>& orbits, const Chord& c)
{
    auto it = std::find_if(orbits.begin(), orbits.end(), [&](const Orbit& o) {
        return std::binary_search(o.members.begin(), o.members.end(), c);
    });
    REQUIRE(it != orbits.end());
    return *it;
}

} // namespace

TEST_CASE("cyclic orbits at L = 12")
{
    const auto all12 = cyclic_orbits(12, 12);
    REQUIRE(all12.size() == 1);
    CHECK(all12[0].size == 1);
    CHECK(all12[0].deficit == 11);
    CHECK(cyclic_orbits(12, 4).size() == 43);
    const auto one = cyclic_orbits(12, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].representative == Chord{12});
}

TEST_CASE("brute-force repeating count")
{
    CHECK(repeating_count_bruteforce(12, 6) == 18);
    CHECK(repeating_count_bruteforce(12, 5) == 0);
    CHECK(repeating_count_bruteforce(12, 2) == 1);
}

TEST_CASE("reflection invariance")
{
    const auto orbits = cyclic_orbits(12, 4);
    CHECK(is_reflection_invariant(orbit_of(orbits, Chord{1, 5, 5, 1})));
    CHECK(is_reflection_invariant(orbit_of(orbits, Chord{5, 5, 1, 1})));
    CHECK_FALSE(is_reflection_invariant(orbit_of(orbits, Chord{1, 2, 3, 6})));
}

TEST_CASE("dihedral census")
{
    const auto c6 = census(12, 6, SymmetryMode::Dihedral);
    CHECK(c6.invariant_classes == 20);
    CHECK(c6.noninvariant_classes == 60);
    CHECK(c6.dihedral_classes == 50);
    const auto c3 = census(12, 3, SymmetryMode::Dihedral);
    CHECK(c3.invariant_classes == 5);
    CHECK(c3.dihedral_classes == 12);
    const auto c2 = census(12, 2, SymmetryMode::Dihedral);
    CHECK(c2.dihedral_classes == c2.classes);
    CHECK(c2.classes == 6);
    CHECK_FALSE(census(12, 2, SymmetryMode::Cyclic).dihedral_classes.has_value());
}

TEST_CASE("census agrees with the rotation-set oracle")
{
    for (int L = 1; L <= 14; ++L)
        for (int n = 1; n <= L; ++n) {
            CAPTURE(L);
            CAPTURE(n);
            const auto t = oracle::orbit_tally(L, n);
            const auto c = census(L, n, SymmetryMode::Dihedral);
            CHECK(c.distinct == t.distinct);
            CHECK(c.classes == t.classes);
            CHECK(c.repeating == t.repeating);
            CHECK(c.total == c.classes * n);
            CHECK(c.invariant_classes == t.invariant);
            CHECK(c.noninvariant_classes == t.noninvariant);
            CHECK(c.dihedral_classes == t.dihedral);
        }
}

TEST_CASE("census rejects cardinalities outside [0, L]")
{
    CHECK_THROWS_AS(census(12, 13, SymmetryMode::Cyclic), Error);
    CHECK_THROWS_AS(cyclic_orbits(12, 0), Error);
}
