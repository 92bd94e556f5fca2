#include <chordenum/algebraic.hpp>
#include <chordenum/enumerator.hpp>

#include <set>

namespace chordenum {

int zeta_divisibility(long m1, long m2)
{
    if (m2 == 0)
        return 1;
    return m1 % m2 == 0 ? 1 : 0;
}

Count primitive_block_classes(int i, int s)
{
    if (i < 1 || s < i)
        return 0;
    if (i == 1)
        return 1;
    // Every composition of s into i parts is d repeated (i/d) times for a
    // unique primitive d-block; a primitive d-block class holds d chords.
    Count imprimitive = 0;
    for (int d = 1; d < i; ++d) {
        if (i % d != 0 || s % (i / d) != 0)
            continue;
        imprimitive += d * primitive_block_classes(d, s / (i / d));
    }
    const Count primitive_chords = binomial(s - 1, i - 1) - imprimitive;
    if (primitive_chords % i != 0)
        throw Error(ErrorCode::InternalInconsistency,
                    "primitive " + std::to_string(i) + "-blocks of " + std::to_string(s) + " do not split into orbits");
    return primitive_chords / i;
}

const RepeatTerm* RepeatBreakdown::find(int i) const
{
    for (const auto& t : terms)
        if (t.i == i)
            return &t;
    return nullptr;
}

RepeatBreakdown repeating_count_formula(int L, int n)
{
    TemperamentParams{L};
    if (n < 1 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [1, L]");
    RepeatBreakdown b;
    b.L = L;
    b.n = n;
    for (int i = 1; i < n; ++i) {
        if (n % i != 0)
            continue;
        RepeatTerm t;
        t.i = i;
        t.zeta = zeta_divisibility(static_cast<long>(L) * i, n);
        if (t.zeta)
            t.classes = primitive_block_classes(i, L * i / n);
        t.repeating = t.zeta * (n - i) * t.classes;
        b.total += t.repeating;
        b.terms.push_back(t);
    }
    return b;
}

Count total_class_count_formula(int L, int n)
{
    const Count sum = count_distinct(L, n) + repeating_count_formula(L, n).total;
    if (sum % n != 0)
        throw Error(ErrorCode::InternalInconsistency,
                    "N_M(" + std::to_string(n) + ") = " + std::to_string(sum) + " is not a multiple of n");
    return sum / n;
}

namespace {

void solve_from(const WeightedEquation& eq, std::size_t pos, int remaining, std::vector<int>& cur,
                std::vector<std::vector<int>>& out)
{
    if (pos == eq.weights.size()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    int reserve = 0;  // the least the remaining weights can absorb
    for (std::size_t j = pos + 1; j < eq.weights.size(); ++j)
        reserve += eq.weights[j];
    const int w = eq.weights[pos];
    for (int v = 1; w * v + reserve <= remaining; ++v) {
        cur.push_back(v);
        solve_from(eq, pos + 1, remaining - w * v, cur, out);
        cur.pop_back();
    }
}

bool is_distinct_solution(const std::vector<int>& sol, const std::vector<int>& weights)
{
    if (std::set<int>(sol.begin(), sol.end()).size() != sol.size())
        return false;
    for (std::size_t j = 1; j < sol.size(); ++j)
        if (weights[j] == weights[j - 1] && sol[j] < sol[j - 1])
            return false;
    return true;
}

} // namespace

std::vector<std::vector<int>> solve_weighted_composition(const WeightedEquation& eq, bool distinct_only)
{
    for (int w : eq.weights)
        if (w < 1)
            throw Error(ErrorCode::NonPositivePart, "weights must be positive");
    std::vector<std::vector<int>> out;
    if (eq.weights.empty())
        return out;
    std::vector<int> cur;
    solve_from(eq, 0, eq.target, cur, out);
    if (distinct_only)
        std::erase_if(out, [&](const auto& sol) { return !is_distinct_solution(sol, eq.weights); });
    return out;
}

} // namespace chordenum
