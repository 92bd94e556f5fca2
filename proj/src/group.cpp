#include <chordenum/enumerator.hpp>
#include <chordenum/group.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace chordenum {

Count euler_phi(long k)
{
    if (k < 1)
        throw Error(ErrorCode::CardinalityOutOfRange, "phi needs k >= 1");
    long result = k;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p != 0)
            continue;
        while (k % p == 0)
            k /= p;
        result -= result / p;
    }
    if (k > 1)
        result -= result / k;
    return result;
}

Count burnside_cyclic_chords(int L, int n)
{
    TemperamentParams{L};
    if (n < 1 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [1, L]");
    Count sum = 0;
    for (int d = 1; d <= n; ++d)
        if (L % d == 0 && n % d == 0)
            sum += euler_phi(d) * binomial(L / d, n / d);
    if (sum % L != 0)
        throw Error(ErrorCode::InternalInconsistency, "Burnside sum " + std::to_string(sum) + " not divisible by L");
    return sum / L;
}

std::vector<GroupAddend> fractional_repeating_addends(int L, int n)
{
    TemperamentParams{L};
    if (n < 0 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [0, L]");
    std::vector<GroupAddend> out;
    for (int j = 2; j <= L; ++j) {
        // every j divides 0, so n = 0 picks up all divisors of L
        if (L % j != 0 || n % j != 0)
            continue;
        out.push_back({j, Rational(euler_phi(j) * binomial(L / j, n / j), L)});
    }
    return out;
}

Rational fractional_repeating_group(int L, int n)
{
    Rational sum;
    for (const auto& a : fractional_repeating_addends(L, n))
        sum += a.value;
    return sum;
}

ColoredNecklaceProblem::ColoredNecklaceProblem(int n_beads, int n_colors, SymmetryMode m)
    : beads(n_beads), colors(n_colors), mode(m)
{
    if (beads < 1 || colors < 1)
        throw Error(ErrorCode::CardinalityOutOfRange, "beads and colours must be positive");
}

std::string PatternCensus::label() const
{
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        out += static_cast<char>('x' + static_cast<int>(i) % 3);
        if (i >= 3)
            out += std::to_string(i / 3);
        if (pattern[i] > 1)
            out += "^" + std::to_string(pattern[i]);
    }
    return out;
}

namespace {

constexpr Count kBruteLimit = 100'000'000;

// colors^e, or -1 once it exceeds `limit`
Count checked_power(Count base, int e, Count limit)
{
    Wide r = 1;
    for (int i = 0; i < e; ++i) {
        r *= base;
        if (r > limit)
            return -1;
    }
    return static_cast<Count>(r);
}

Count exact_power(Count base, int e)
{
    const Count r = checked_power(base, e, INT64_MAX);
    if (r < 0)
        throw Error(ErrorCode::Overflow, std::to_string(base) + "^" + std::to_string(e) + " overflows");
    return r;
}

// Bead permutations of the symmetry group: i -> (i + k) mod N, and for the
// dihedral case also i -> (k - i) mod N.
std::vector<std::vector<int>> group_permutations(int N, SymmetryMode mode)
{
    std::vector<std::vector<int>> perms;
    for (int k = 0; k < N; ++k) {
        std::vector<int> p(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            p[static_cast<std::size_t>(i)] = (i + k) % N;
        perms.push_back(std::move(p));
    }
    if (mode == SymmetryMode::Dihedral) {
        for (int k = 0; k < N; ++k) {
            std::vector<int> p(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i)
                p[static_cast<std::size_t>(i)] = ((k - i) % N + N) % N;
            perms.push_back(std::move(p));
        }
    }
    return perms;
}

int cycle_count(const std::vector<int>& perm)
{
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
            seen[j] = true;
    }
    return cycles;
}

std::vector<int> multiplicity_pattern(const std::vector<int>& digits, int colors)
{
    std::vector<int> counts(static_cast<std::size_t>(colors), 0);
    for (int d : digits)
        ++counts[static_cast<std::size_t>(d)];
    std::erase(counts, 0);
    std::sort(counts.rbegin(), counts.rend());
    return counts;
}

} // namespace

ColoredCensus colored_count_brute(const ColoredNecklaceProblem& p)
{
    const int N = p.beads;
    const Count total = checked_power(p.colors, N, kBruteLimit);
    if (total < 0)
        throw Error(ErrorCode::ProblemTooLarge,
                    std::to_string(p.colors) + "^" + std::to_string(N) + " colourings exceed the brute-force cap");

    const auto perms = group_permutations(N, p.mode);
    ColoredCensus c;
    c.distinct = total;
    c.group_order = static_cast<int>(perms.size());

    std::map<std::vector<int>, PatternCensus, std::greater<>> patterns;
    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    std::vector<int> digits(static_cast<std::size_t>(N));
    std::vector<int> image(static_cast<std::size_t>(N));

    for (Count code = 0; code < total; ++code) {
        if (visited[static_cast<std::size_t>(code)])
            continue;
        Count rest = code;
        for (int i = N - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % p.colors);
            rest /= p.colors;
        }
        Count orbit_size = 0;
        for (const auto& perm : perms) {
            for (int i = 0; i < N; ++i)
                image[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = digits[static_cast<std::size_t>(i)];
            Count img = 0;
            for (int d : image)
                img = img * p.colors + d;
            if (!visited[static_cast<std::size_t>(img)]) {
                visited[static_cast<std::size_t>(img)] = true;
                ++orbit_size;
            }
        }
        ++c.classes;
        auto key = multiplicity_pattern(digits, p.colors);
        auto& pc = patterns[key];
        pc.pattern = key;
        ++pc.classes;
        pc.distinct += orbit_size;
    }

    c.total = c.classes * c.group_order;
    c.repeating = c.total - c.distinct;
    for (auto& [key, pc] : patterns) {
        pc.repeating = pc.classes * c.group_order - pc.distinct;
        c.by_pattern.push_back(pc);
    }
    return c;
}

Count colored_count_burnside(const ColoredNecklaceProblem& p)
{
    const int N = p.beads;
    const Count L = p.colors;
    Count sum = 0;
    for (int d = 1; d <= N; ++d)
        if (N % d == 0)
            sum += euler_phi(d) * exact_power(L, N / d);
    Count order = N;
    if (p.mode == SymmetryMode::Dihedral) {
        order = 2 * N;
        if (N % 2 == 1)
            sum += N * exact_power(L, (N + 1) / 2);
        else
            sum += (N / 2) * (exact_power(L, N / 2 + 1) + exact_power(L, N / 2));
    }
    if (sum % order != 0)
        throw Error(ErrorCode::InternalInconsistency, "Burnside sum not divisible by the group order");
    return sum / order;
}

std::vector<PatternCensus> colored_census_by_type(const ColoredNecklaceProblem& p)
{
    return colored_count_brute(p).by_pattern;
}

std::vector<GroupElementFixedPoints> burnside_fixed_point_table(const ColoredNecklaceProblem& p)
{
    const auto perms = group_permutations(p.beads, p.mode);
    std::vector<GroupElementFixedPoints> out;
    for (std::size_t g = 0; g < perms.size(); ++g) {
        const auto k = static_cast<int>(g) % p.beads;
        GroupElementFixedPoints e;
        e.element = (static_cast<int>(g) < p.beads ? "r^" : "s r^") + std::to_string(k);
        e.cycles = cycle_count(perms[g]);
        e.fixed = exact_power(p.colors, e.cycles);
        out.push_back(e);
    }
    return out;
}

} // namespace chordenum
