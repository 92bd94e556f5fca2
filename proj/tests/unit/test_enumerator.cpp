#include "../support/oracles.hpp"

#include <chordenum/enumerator.hpp>

#include <doctest.h>

using namespace chordenum;

TEST_CASE("stream is lexicographic and matches the subset oracle")
{
    for (int L = 1; L <= 12; ++L)
        for (int n = 1; n <= L; ++n) {
            std::vector<std::vector<int>> got;
            for (const auto& c : enumerate_chords(L, n))
                got.push_back(c.vec());
            CHECK(got == oracle::compositions(L, n));
            CHECK(count_distinct(L, n) == static_cast<Count>(got.size()));
        }
    const auto c3 = enumerate_chords(12, 3);
    REQUIRE(c3.size() == 55);
    CHECK(c3.front() == Chord{1, 1, 10});
    CHECK(c3.back() == Chord{10, 1, 1});
    CHECK(enumerate_chords(12, 1) == std::vector<Chord>{Chord{12}});
    CHECK(enumerate_chords(12, 12).size() == 1);
}

TEST_CASE("distinct counts and fractional parts")
{
    CHECK(count_distinct(12, 3) == 55);
    CHECK(count_distinct(12, 6) == 462);
    CHECK(count_distinct(12, 0) == 0);
    CHECK(fractional_distinct(12, 4) == Rational(165, 4));
    CHECK(fractional_distinct(12, 0) == Rational(1, 12));
    CHECK(fractional_distinct(12, 12) == Rational(1, 12));
    CHECK(integer_part_distinct(12, 4) == 41);
    CHECK(integer_part_distinct(12, 6) == 77);
    CHECK(integer_part_distinct(12, 0) == 0);
    for (int L = 1; L <= 30; ++L)
        for (int n = 0; n <= L; ++n)
            CHECK(fractional_distinct(L, n) == fractional_distinct(L, L - n));
    for (int n = 1; n <= 12; ++n)
        CHECK(count_distinct(12, n) == count_distinct(12, 13 - n));
}

TEST_CASE("binomial matches Pascal's triangle")
{
    for (int n = 0; n <= 62; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("conjugate point")
{
    CHECK(conjugate_point(Chord{2, 4, 6}) == std::vector<int>{10, 4});
    CHECK(conjugate_point(Chord{1, 1, 10}) == std::vector<int>{11, 1});
    CHECK_THROWS_AS(conjugate_point(Chord{12}), Error);
}
