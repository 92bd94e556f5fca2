#pragma once

#include <chordenum/chord.hpp>
#include <chordenum/rational.hpp>

#include <string>
#include <vector>

namespace chordenum {

/// Euler's totient; euler_phi(1) == 1. Throws CardinalityOutOfRange for k < 1.
Count euler_phi(long k);

/// Number of rotation classes of n-chords by Burnside's lemma:
/// (1/L) * sum over common divisors d of L and n of phi(d) C(L/d, n/d).
Count burnside_cyclic_chords(int L, int n);

/// One addend phi(j) C(L/j, n/j) / L of the Burnside sum, for j >= 2.
struct GroupAddend {
    int j = 0;
    Rational value;
};

/// The Burnside sum minus its j = 1 term: the fractional number of
/// repeating n-chords. At n = 0 the sum runs over all divisors of L.
Rational fractional_repeating_group(int L, int n);

/// Addends of fractional_repeating_group, ascending in j.
std::vector<GroupAddend> fractional_repeating_addends(int L, int n);

/// Colourings of N beads with L colours up to rotation (cyclic) or
/// rotation and reflection (dihedral).
struct ColoredNecklaceProblem {
    int beads = 4;
    int colors = 3;
    SymmetryMode mode = SymmetryMode::Cyclic;

    ColoredNecklaceProblem(int n_beads, int n_colors, SymmetryMode m);
};

/// Counts restricted to colourings with a given colour-multiplicity pattern,
/// e.g. {2,1,1} for x^2 y z.
struct PatternCensus {
    std::vector<int> pattern;  ///< multiplicities, descending
    Count distinct = 0;        ///< colourings with this pattern
    Count repeating = 0;
    Count classes = 0;

    std::string label() const;  ///< "x^2yz"
};

struct ColoredCensus {
    Count distinct = 0;   ///< colors^beads
    Count repeating = 0;  ///< classes * |G| - distinct
    Count total = 0;      ///< classes * |G|
    Count classes = 0;
    int group_order = 0;
    std::vector<PatternCensus> by_pattern;  ///< ordered by pattern, descending lexicographic
};

/// Brute-force orbit census. Throws ProblemTooLarge beyond 10^8 colourings.
ColoredCensus colored_count_brute(const ColoredNecklaceProblem& p);

/// Class count by Burnside's lemma.
Count colored_count_burnside(const ColoredNecklaceProblem& p);

/// Per-pattern part of the brute census.
std::vector<PatternCensus> colored_census_by_type(const ColoredNecklaceProblem& p);

/// Fixed colourings of one group element.
struct GroupElementFixedPoints {
    std::string element;  ///< "r^k" for rotations, "s r^k" for reflections
    int cycles = 0;       ///< cycles of the bead permutation
    Count fixed = 0;      ///< colors^cycles
};

/// Element-by-element Burnside table, rotations first.
std::vector<GroupElementFixedPoints> burnside_fixed_point_table(const ColoredNecklaceProblem& p);

} // namespace chordenum
