#pragma once

// Randomised property checks shared by the property suite and the
// acceptance binary. Every check draws from a fixed-seed mt19937_64.

#include "oracles.hpp"

#include <chordenum/chord.hpp>
#include <chordenum/enumerator.hpp>
#include <chordenum/geometry.hpp>
#include <chordenum/orbits.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

namespace props {

inline constexpr int kCases = 1000;
inline constexpr std::uint64_t kSeed = 0x5eed'c0de'1234'abcdULL;

struct Result {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases >= kCases; }
    void fail(std::string what)
    {
        if (failures++ == 0)
            first_failure = std::move(what);
    }
};

inline int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random n-chord of L: n-1 distinct cut points drawn from 1..L-1.
inline chordenum::Chord random_chord(std::mt19937_64& rng, int L, int n)
{
    std::vector<int> cuts(static_cast<std::size_t>(L - 1));
    for (int i = 0; i < L - 1; ++i)
        cuts[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(static_cast<std::size_t>(n - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> parts;
    int last = 0;
    for (int c : cuts) {
        parts.push_back(c - last);
        last = c;
    }
    parts.push_back(L - last);
    return chordenum::Chord(parts, chordenum::TemperamentParams{L});
}

inline chordenum::Chord random_chord(std::mt19937_64& rng, int max_L = 40)
{
    const int L = uniform(rng, 1, max_L);
    return random_chord(rng, L, uniform(rng, 1, L));
}

inline Result prime_form_orbit_constancy()
{
    using namespace chordenum;
    Result r{"prime form is constant on orbits"};
    std::mt19937_64 rng(kSeed);
    for (; r.cases < kCases; ++r.cases) {
        const Chord c = random_chord(rng);
        const long k = uniform(rng, -50, 50);
        const Chord moved = transpose(c, k);
        if (prime_form(moved, SymmetryMode::Cyclic) != prime_form(c, SymmetryMode::Cyclic))
            r.fail("cyclic " + c.to_string());
        if (prime_form(reflect(moved), SymmetryMode::Dihedral) != prime_form(c, SymmetryMode::Dihedral))
            r.fail("dihedral " + c.to_string());
        const Chord p = prime_form(c, SymmetryMode::Cyclic);
        if (oracle::rotation_set(c.vec()).count(p.vec()) == 0)
            r.fail("prime form outside orbit " + c.to_string());
    }
    return r;
}

inline Result reflect_involution()
{
    using namespace chordenum;
    Result r{"reflect is an involution"};
    std::mt19937_64 rng(kSeed + 1);
    for (; r.cases < kCases; ++r.cases) {
        const Chord c = random_chord(rng);
        if (reflect(reflect(c)) != c)
            r.fail(c.to_string());
        std::vector<int> rev(c.vec().rbegin(), c.vec().rend());
        if (reflect(c).vec() != rev)
            r.fail("not the reversal " + c.to_string());
    }
    return r;
}

inline Result transpose_additivity()
{
    using namespace chordenum;
    Result r{"transpose is additive"};
    std::mt19937_64 rng(kSeed + 2);
    for (; r.cases < kCases; ++r.cases) {
        const Chord c = random_chord(rng);
        const long a = uniform(rng, -100, 100);
        const long b = uniform(rng, -100, 100);
        if (transpose(transpose(c, a), b) != transpose(c, a + b))
            r.fail(c.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        if (transpose(c, c.cardinality()) != c)
            r.fail("full cycle " + c.to_string());
    }
    return r;
}

// (L, n) drawn with L <= 13 so full orbit enumeration stays cheap.
inline std::pair<int, int> random_problem(std::mt19937_64& rng, int max_L = 13)
{
    const int L = uniform(rng, 1, max_L);
    return {L, uniform(rng, 1, L)};
}

inline Result orbit_size_divides_n()
{
    using namespace chordenum;
    Result r{"orbit size divides n"};
    std::mt19937_64 rng(kSeed + 3);
    for (; r.cases < kCases; ++r.cases) {
        const auto [L, n] = random_problem(rng);
        Count members = 0;
        for (const auto& o : cyclic_orbits(L, n)) {
            members += o.size;
            if (n % o.size != 0 || o.deficit != n - o.size)
                r.fail("L=" + std::to_string(L) + " n=" + std::to_string(n));
        }
        if (members != count_distinct(L, n))
            r.fail("orbits do not partition L=" + std::to_string(L) + " n=" + std::to_string(n));
    }
    return r;
}

inline Result nu_N_even()
{
    using namespace chordenum;
    Result r{"non-invariant class count is even"};
    std::mt19937_64 rng(kSeed + 4);
    for (; r.cases < kCases; ++r.cases) {
        const auto [L, n] = random_problem(rng);
        const auto c = census(L, n, SymmetryMode::Dihedral);
        const Count nuN = c.noninvariant_classes.value_or(-1);
        if (nuN < 0 || nuN % 2 != 0)
            r.fail("L=" + std::to_string(L) + " n=" + std::to_string(n));
        if (c.dihedral_classes.value_or(-1) != c.invariant_classes.value_or(-1) + nuN / 2)
            r.fail("nu_Q != nu_P + nu_N/2 at L=" + std::to_string(L) + " n=" + std::to_string(n));
    }
    return r;
}

inline Result conjugate_point_bijection()
{
    using namespace chordenum;
    Result r{"conjugate point is injective onto decreasing tuples"};
    std::mt19937_64 rng(kSeed + 5);
    for (; r.cases < kCases; ++r.cases) {
        const int L = uniform(rng, 2, 14);
        const int n = uniform(rng, 2, L);
        std::set<std::vector<int>> image;
        for (const auto& c : enumerate_chords(L, n)) {
            const auto q = conjugate_point(c);
            bool good = static_cast<int>(q.size()) == n - 1;
            for (std::size_t i = 0; good && i < q.size(); ++i)
                good = q[i] >= 1 && q[i] <= L - 1 && (i == 0 || q[i] < q[i - 1]);
            if (!good)
                r.fail("bad image of " + c.to_string());
            image.insert(q);
        }
        if (static_cast<Count>(image.size()) != oracle::pascal(L - 1, n - 1))
            r.fail("image size L=" + std::to_string(L) + " n=" + std::to_string(n));
    }
    return r;
}

inline Result composition_total()
{
    using namespace chordenum;
    Result r{"sum of N_C over n is 2^(L-1)"};
    std::mt19937_64 rng(kSeed + 6);
    for (; r.cases < kCases; ++r.cases) {
        const int L = uniform(rng, 1, 20);
        Count sum = 0;
        for (int n = 1; n <= L; ++n)
            sum += count_distinct(L, n);
        if (sum != (Count{1} << (L - 1)))
            r.fail("L=" + std::to_string(L));
        // the stream agrees with the count for a random n
        const int n = uniform(rng, 1, std::min(L, 12));
        if (L <= 16) {
            Count streamed = 0;
            for (auto it = ChordStream(L, n).begin(); it != ChordStream(L, n).end(); ++it)
                ++streamed;
            if (streamed != count_distinct(L, n))
                r.fail("stream length L=" + std::to_string(L) + " n=" + std::to_string(n));
        }
    }
    return r;
}

inline Result palindrome_locus_points()
{
    using namespace chordenum;
    Result r{"palindrome locus points are palindromes"};
    std::mt19937_64 rng(kSeed + 7);
    auto reversed_equal = [](const RationalPoint& p) { return RationalPoint(p.rbegin(), p.rend()) == p; };
    for (; r.cases < kCases; ++r.cases) {
        const int L = uniform(rng, 3, kMaxTemperament);
        const int n = uniform(rng, 3, L);
        const int k = uniform(rng, 1, L / n);
        const auto loc = palindrome_locus(L, n, k);
        const std::string tag = "L=" + std::to_string(L) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (!reversed_equal(loc.endpoint_a) || !reversed_equal(loc.endpoint_b))
            r.fail("endpoint " + tag);
        for (const auto& c : loc.interior_points) {
            if (reflect(c) != c)
                r.fail(c.to_string() + " " + tag);
            if (!is_collinear(loc.endpoint_a, loc.endpoint_b, to_point(c)))
                r.fail("off the line " + c.to_string() + " " + tag);
            for (int v : c.vec())
                if (v < k)
                    r.fail("outside shell " + c.to_string() + " " + tag);
        }
    }
    return r;
}

inline Result orthocentre_alignment_opposite_faces()
{
    using namespace chordenum;
    Result r{"opposite face orthocentres align with the centre"};
    std::mt19937_64 rng(kSeed + 8);
    // exhaustive over n <= 8 for one scale, then random scales
    auto all_subsets = [&](int L, int n) {
        const LatticeSimplex s(L, n);
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            FaceSelector f;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    f.indices.push_back(i + 1);
            if (!orthocentre_alignment(s, f))
                r.fail("L=" + std::to_string(L) + " n=" + std::to_string(n) + " mask=" + std::to_string(mask));
        }
    };
    for (int n = 2; n <= 8; ++n)
        all_subsets(12, n);
    for (; r.cases < kCases; ++r.cases)
        all_subsets(uniform(rng, 1, kMaxTemperament), uniform(rng, 2, 8));
    return r;
}

inline std::vector<Result (*)()> all()
{
    return {prime_form_orbit_constancy, reflect_involution,      transpose_additivity,
            orbit_size_divides_n,       nu_N_even,               conjugate_point_bijection,
            composition_total,          palindrome_locus_points, orthocentre_alignment_opposite_faces};
}

} // namespace props
