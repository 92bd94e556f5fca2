#pragma once

#include <chordenum/chord.hpp>

#include <vector>

namespace chordenum {

/// 1 if m2 divides m1 or m2 == 0, else 0.
int zeta_divisibility(long m1, long m2);

/// Cyclic classes of compositions of s into i parts whose orbit has full
/// length i. By convention a single part is primitive whenever s >= 1.
Count primitive_block_classes(int i, int s);

/// Contribution of chords built from n/i copies of an i-part block.
struct RepeatTerm {
    int i = 0;            ///< block length, a proper divisor of n
    int zeta = 0;         ///< zeta(L*i, n)
    Count classes = 0;    ///< nu_i(n), zero when zeta gates it out
    Count repeating = 0;  ///< Delta N_i = zeta * (n - i) * nu_i
};

struct RepeatBreakdown {
    int L = 12;
    int n = 0;
    std::vector<RepeatTerm> terms;  ///< one per proper divisor of n, ascending
    Count total = 0;

    /// Term for block length i, or nullptr if i is not a proper divisor.
    const RepeatTerm* find(int i) const;
};

/// Delta N(n) as a sum over proper divisors i of n.
RepeatBreakdown repeating_count_formula(int L, int n);

/// nu_M = (N_C + Delta N) / n. Throws InternalInconsistency on a remainder.
Count total_class_count_formula(int L, int n);

/// k_1 l_1 + ... + k_i l_i = target over positive integers l_j.
struct WeightedEquation {
    std::vector<int> weights;
    int target = 12;
};

/// Every positive solution, lexicographically ordered. With `distinct_only`
/// a solution is kept only if its values are pairwise distinct and, within
/// each run of equal weights, ascending; this drops solutions that collapse
/// onto a shorter block or repeat an earlier one under permutation.
std::vector<std::vector<int>> solve_weighted_composition(const WeightedEquation& eq, bool distinct_only = false);

} // namespace chordenum
