#include "../support/oracles.hpp"

#include <chordenum/group.hpp>
#include <chordenum/orbits.hpp>

#include <doctest.h>

using namespace chordenum;

TEST_CASE("euler phi")
{
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(11) == 10);
    CHECK(euler_phi(1) == 1);
    for (long k = 1; k <= 200; ++k) {
        Count coprime = 0;
        for (long j = 1; j <= k; ++j)
            if (std::gcd(j, k) == 1)
                ++coprime;
        CHECK(euler_phi(k) == coprime);
    }
}

TEST_CASE("Burnside class count")
{
    CHECK(burnside_cyclic_chords(12, 6) == 80);
    CHECK(burnside_cyclic_chords(12, 1) == 1);
    CHECK(burnside_cyclic_chords(12, 4) == 43);
    for (int L = 1; L <= 16; ++L)
        for (int n = 1; n <= L; ++n)
            CHECK(burnside_cyclic_chords(L, n) == oracle::orbit_tally(L, n).classes);
}

TEST_CASE("fractional repeating count by group route")
{
    CHECK(fractional_repeating_group(12, 6) == Rational(3));
    CHECK(fractional_repeating_group(12, 4) == Rational(7, 4));
    CHECK(fractional_repeating_group(12, 11) == Rational(0));
    CHECK(fractional_repeating_group(12, 0) == Rational(11, 12));
    for (int L = 1; L <= 14; ++L)
        for (int n = 1; n <= L; ++n)
            CHECK(fractional_repeating_group(L, n) == Rational(oracle::orbit_tally(L, n).repeating, n));
}

TEST_CASE("coloured necklaces, 4 beads in 3 colours")
{
    const ColoredNecklaceProblem cyc(4, 3, SymmetryMode::Cyclic);
    const auto c = colored_count_brute(cyc);
    CHECK(c.distinct == 81);
    CHECK(c.repeating == 15);
    CHECK(c.total == 96);
    CHECK(c.classes == 24);
    CHECK(colored_count_burnside(cyc) == 24);

    const ColoredNecklaceProblem dih(4, 3, SymmetryMode::Dihedral);
    const auto d = colored_count_brute(dih);
    CHECK(d.repeating == 87);
    CHECK(d.total == 168);
    CHECK(d.classes == 21);
    CHECK(colored_count_burnside(dih) == 21);

    std::vector<Count> cyc_types, dih_types;
    for (const auto& p : colored_census_by_type(cyc))
        cyc_types.push_back(p.classes);
    for (const auto& p : colored_census_by_type(dih))
        dih_types.push_back(p.classes);
    CHECK(cyc_types == std::vector<Count>{3, 6, 6, 9});
    CHECK(dih_types == std::vector<Count>{3, 6, 6, 6});
    CHECK(colored_census_by_type(cyc).back().label() == "x^2yz");
}

TEST_CASE("coloured necklace edge cases")
{
    CHECK(colored_count_brute({1, 1, SymmetryMode::Cyclic}).classes == 1);
    CHECK(colored_count_burnside({4, 1, SymmetryMode::Cyclic}) == 1);
    const auto two = colored_census_by_type({2, 2, SymmetryMode::Cyclic});
    REQUIRE(two.size() == 2);
    CHECK(two[0].label() == "x^2");
    CHECK(two[0].classes == 2);
    CHECK(two[1].label() == "xy");
    CHECK(two[1].classes == 1);
    CHECK_THROWS_AS(ColoredNecklaceProblem(0, 3, SymmetryMode::Cyclic), Error);
    CHECK_THROWS_AS(colored_count_brute({40, 3, SymmetryMode::Cyclic}), Error);
}

TEST_CASE("brute force, Burnside and the necklace oracle agree")
{
    for (int beads = 1; beads <= 8; ++beads)
        for (int colors = 1; colors <= 4; ++colors)
            for (auto mode : {SymmetryMode::Cyclic, SymmetryMode::Dihedral}) {
                const ColoredNecklaceProblem p(beads, colors, mode);
                const auto o = oracle::necklaces(beads, colors, mode == SymmetryMode::Dihedral);
                const auto b = colored_count_brute(p);
                CHECK(b.classes == o.classes);
                CHECK(colored_count_burnside(p) == o.classes);
                REQUIRE(b.by_pattern.size() == o.by_pattern.size());
                for (std::size_t i = 0; i < o.by_pattern.size(); ++i) {
                    CHECK(b.by_pattern[i].pattern == o.by_pattern[i].first);
                    CHECK(b.by_pattern[i].classes == o.by_pattern[i].second);
                }
            }
}

TEST_CASE("fixed point table sums to the Burnside numerator")
{
    const ColoredNecklaceProblem p(4, 3, SymmetryMode::Dihedral);
    const auto table = burnside_fixed_point_table(p);
    REQUIRE(table.size() == 8);
    Count sum = 0;
    for (const auto& e : table)
        sum += e.fixed;
    CHECK(sum == 168);
    CHECK(table[0].element == "r^0");
    CHECK(table[0].fixed == 81);
}
