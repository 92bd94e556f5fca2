#pragma once

#include <chordenum/chord.hpp>
#include <chordenum/rational.hpp>

#include <map>
#include <optional>
#include <vector>

namespace chordenum {

/// One rotation class of n-chords, found by brute force.
struct Orbit {
    Chord representative;        ///< cyclic prime form
    std::vector<Chord> members;  ///< distinct rotations, sorted
    int size = 0;                ///< members.size(); divides n
    int deficit = 0;             ///< n - size
    bool reflection_invariant = false;
};

/// Per-period totals: orbits whose size (= minimal period) is `period`.
struct PeriodTally {
    int orbits = 0;
    Count deficit = 0;
};

struct OrbitCensus {
    int L = 12;
    int n = 0;
    SymmetryMode mode = SymmetryMode::Cyclic;
    std::vector<Orbit> orbits;

    Count distinct = 0;   ///< N_C, sum of orbit sizes
    Count repeating = 0;  ///< Delta N, sum of deficits
    Count total = 0;      ///< N_M = N_C + Delta N
    Count classes = 0;    ///< nu_M = N_M / n

    /// Rotation classes keyed by orbit size, for sizes smaller than n.
    std::map<int, PeriodTally> by_period;

    // dihedral mode only
    std::optional<Count> invariant_classes;     ///< nu_P
    std::optional<Count> noninvariant_classes;  ///< nu_N
    std::optional<Count> dihedral_classes;      ///< nu_Q

    Rational distinct_per_n;   ///< N_C / n
    Rational repeating_per_n;  ///< Delta N / n
    Rational total_per_n;      ///< N_M / n
};

/// Largest chord count the orbit enumeration accepts.
inline constexpr Count kMaxOrbitChords = 5'000'000;

/// Rotation classes of all n-chords, ordered by representative. Throws
/// ProblemTooLarge above kMaxOrbitChords.
std::vector<Orbit> cyclic_orbits(int L, int n);

/// Sum of (n - orbit size) over every rotation class.
Count repeating_count_bruteforce(int L, int n);

/// True iff the reversal of the representative lies in the same rotation
/// class (palindromes and pseudo-palindromes alike).
bool is_reflection_invariant(const Orbit& o);

/// Full census. n = 0 yields the conventional empty-chord row
/// (nu_M = nu_P = nu_Q = 1, Delta N / n = (L-1)/L).
OrbitCensus census(int L, int n, SymmetryMode mode);

} // namespace chordenum
