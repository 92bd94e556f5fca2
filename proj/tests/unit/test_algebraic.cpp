#include "../support/oracles.hpp"

#include <chordenum/algebraic.hpp>
#include <chordenum/orbits.hpp>

#include <doctest.h>

using namespace chordenum;

TEST_CASE("zeta divisibility")
{
    CHECK(zeta_divisibility(12, 4) == 1);
    CHECK(zeta_divisibility(12, 5) == 0);
    CHECK(zeta_divisibility(12, 0) == 1);
}

TEST_CASE("primitive block classes")
{
    CHECK(primitive_block_classes(2, 6) == 2);
    CHECK(primitive_block_classes(3, 6) == 3);
    CHECK(primitive_block_classes(4, 6) == 2);
    for (int s = 1; s <= 16; ++s)
        for (int i = 1; i <= s; ++i) {
            CAPTURE(i);
            CAPTURE(s);
            CHECK(primitive_block_classes(i, s) == oracle::primitive_blocks(i, s));
        }
}

TEST_CASE("repeating count by formula")
{
    const auto b8 = repeating_count_formula(12, 8);
    REQUIRE(b8.find(2) != nullptr);
    REQUIRE(b8.find(4) != nullptr);
    CHECK(b8.find(2)->repeating == 6);
    CHECK(b8.find(4)->repeating == 8);
    CHECK(b8.total == 14);
    const auto b6 = repeating_count_formula(12, 6);
    CHECK(b6.find(1)->repeating == 5);
    CHECK(b6.find(2)->repeating == 4);
    CHECK(b6.find(3)->repeating == 9);
    CHECK(b6.total == 18);
    CHECK(repeating_count_formula(12, 7).total == 0);
}

TEST_CASE("class count by formula")
{
    CHECK(total_class_count_formula(12, 6) == 80);
    CHECK(total_class_count_formula(12, 4) == 43);
    CHECK(total_class_count_formula(12, 12) == 1);
    for (int L = 1; L <= 16; ++L)
        for (int n = 1; n <= L; ++n) {
            const auto t = oracle::orbit_tally(L, n);
            CHECK(total_class_count_formula(L, n) == t.classes);
            CHECK(repeating_count_formula(L, n).total == t.repeating);
        }
}

TEST_CASE("prime temperament has no repeating chords")
{
    for (int n = 2; n < 7; ++n)
        CHECK(repeating_count_bruteforce(7, n) == 0);
}

TEST_CASE("weighted compositions")
{
    using V = std::vector<std::vector<int>>;
    CHECK(solve_weighted_composition({{2, 1}, 12}) == V{{1, 10}, {2, 8}, {3, 6}, {4, 4}, {5, 2}});
    CHECK(solve_weighted_composition({{4, 1}, 12}) == V{{1, 8}, {2, 4}});
    CHECK(solve_weighted_composition({{12}, 12}) == V{{1}});
    for (const auto& w : std::vector<std::vector<int>>{{2, 1}, {2, 1, 1}, {3, 2, 1}, {4, 1, 1}, {2, 2, 2}, {5, 2, 1}})
        for (int target = 1; target <= 20; ++target)
            CHECK(solve_weighted_composition({w, target}) == oracle::weighted_solutions(w, target));
}

TEST_CASE("distinct filter drops repeated values and orders equal weights")
{
    using V = std::vector<std::vector<int>>;
    CHECK(solve_weighted_composition({{2, 1}, 12}, true) == V{{1, 10}, {2, 8}, {3, 6}, {5, 2}});
    CHECK(solve_weighted_composition({{2, 2}, 12}, true) == V{{1, 5}, {2, 4}});
    for (const auto& sol : solve_weighted_composition({{2, 1, 1}, 12}, true)) {
        CHECK(sol[0] != sol[1]);
        CHECK(sol[1] < sol[2]);
    }
}
