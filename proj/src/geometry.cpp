#include <chordenum/enumerator.hpp>
#include <chordenum/geometry.hpp>

#include <algorithm>

namespace chordenum {

namespace {

void require_same_dimension(const RationalPoint& a, const RationalPoint& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch,
                    "dimensions " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " differ");
}

Rational dot(const RationalPoint& a, const RationalPoint& b)
{
    require_same_dimension(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const RationalPoint& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == Rational(0); });
}

void validate_selector(const FaceSelector& f, int n)
{
    if (f.indices.empty())
        throw Error(ErrorCode::InvalidSelector, "face selector is empty");
    for (std::size_t i = 0; i < f.indices.size(); ++i) {
        if (f.indices[i] < 1 || f.indices[i] > n)
            throw Error(ErrorCode::InvalidSelector, "face index " + std::to_string(f.indices[i]) + " out of range");
        if (i > 0 && f.indices[i] <= f.indices[i - 1])
            throw Error(ErrorCode::InvalidSelector, "face indices must be strictly increasing");
    }
}

} // namespace

LatticeSimplex::LatticeSimplex(int scale, int dimension) : L(scale), n(dimension)
{
    TemperamentParams{scale};
    if (dimension < 1)
        throw Error(ErrorCode::CardinalityOutOfRange, "simplex needs n >= 1");
}

RationalPoint LatticeSimplex::vertex(int i) const
{
    validate_selector(FaceSelector{{i}}, n);
    RationalPoint v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i - 1)] = L;
    return v;
}

Count face_count(int n, int j)
{
    return binomial(n, j);
}

Orthocentre orthocentre(const LatticeSimplex& s)
{
    return {RationalPoint(static_cast<std::size_t>(s.n), Rational(s.L, s.n)), s.L % s.n == 0};
}

RationalPoint face_orthocentre(const LatticeSimplex& s, const FaceSelector& f)
{
    validate_selector(f, s.n);
    const Rational coord(s.L, static_cast<std::int64_t>(f.indices.size()));
    RationalPoint p(static_cast<std::size_t>(s.n));
    for (int i : f.indices)
        p[static_cast<std::size_t>(i - 1)] = coord;
    return p;
}

Count LatticeRecursion::at(int k, int m) const
{
    if (m < 0 || m >= static_cast<int>(tau.size()))
        return 0;
    const auto& row = tau[static_cast<std::size_t>(m)];
    if (k < 1 || k >= static_cast<int>(row.size()))
        return 0;
    return row[static_cast<std::size_t>(k)];
}

LatticeRecursion interior_lattice_count_recursive(int L, int n)
{
    TemperamentParams{L};
    if (n < 1 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [1, L]");
    LatticeRecursion r;
    r.L = L;
    r.n = n;
    if (n == 1) {
        r.total = 1;  // the single vertex-free point (L)
        return r;
    }

    // Layers of rank below n-2 are shared with the (n-1) problem, which
    // also supplies the seed of the top layer.
    const LatticeRecursion lower = interior_lattice_count_recursive(L, n - 1);
    const int top = L - n + 2;
    for (const auto& row : lower.tau)
        r.tau.emplace_back(row.begin(), row.begin() + top + 1);

    const int m = n - 2;
    std::vector<Count> row(static_cast<std::size_t>(top + 1), 0);
    row[static_cast<std::size_t>(top)] = lower.total;
    for (int k = top - 1; k >= 1; --k)
        row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k + 1)] - r.at(k + 1, m - 1);
    r.tau.push_back(std::move(row));

    for (int k = 1; k <= L - n + 1; ++k)
        r.total += r.at(k, m);
    return r;
}

Count surface_lattice_count_formula(int L, int n)
{
    if (n <= 1)
        return 0;
    return n * (count_distinct(L, n - 1) + count_distinct(L, n - 2));
}

Count volume_lattice_count_formula(int L, int n)
{
    return surface_lattice_count_formula(L, n) + count_distinct(L, n);
}

Count lattice_count_oracle(int L, int n, Positivity positivity)
{
    if (n < 1)
        throw Error(ErrorCode::CardinalityOutOfRange, "lattice count needs n >= 1");
    if (positivity == Positivity::Positive)
        return binomial(L - 1, n - 1);
    return binomial(L + n - 1, n - 1);
}

Count boundary_lattice_count_oracle(int L, int n)
{
    return lattice_count_oracle(L, n, Positivity::Nonnegative) - lattice_count_oracle(L, n, Positivity::Positive);
}

bool in_congruent_region(const RationalPoint& x, int L, int i)
{
    const int n = static_cast<int>(x.size());
    if (i < 1 || i > n)
        throw Error(ErrorCode::InvalidSelector, "region index " + std::to_string(i) + " out of range");
    if (x[static_cast<std::size_t>(i - 1)] > Rational(L, n))
        return false;
    return std::all_of(x.begin(), x.end(),
                       [&](const Rational& v) { return v >= Rational(1) && v <= Rational(L - (n - 1)); });
}

bool in_congruent_region(const Chord& c, int i)
{
    return in_congruent_region(to_point(c), c.temperament(), i);
}

Rational distance(const RationalPoint& a, const RationalPoint& b)
{
    require_same_dimension(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

RationalPoint midpoint(const RationalPoint& a, const RationalPoint& b)
{
    require_same_dimension(a, b);
    RationalPoint m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = (a[i] + b[i]) / Rational(2);
    return m;
}

RationalPoint to_point(const Chord& c)
{
    return RationalPoint(c.vec().begin(), c.vec().end());
}

Rational line_angle_cosine(const RationalPoint& dir_a, const RationalPoint& dir_b)
{
    require_same_dimension(dir_a, dir_b);
    if (is_zero(dir_a) || is_zero(dir_b))
        throw Error(ErrorCode::ZeroDirection, "direction vector is zero");
    const Rational d = dot(dir_a, dir_b);
    return d * d / (dot(dir_a, dir_a) * dot(dir_b, dir_b));
}

Rational line_plane_sine(const RationalPoint& dir, const RationalPoint& normal)
{
    return line_angle_cosine(dir, normal);
}

Rational permutation_angle_cosine(const Chord& c, const std::vector<int>& perm)
{
    const int n = c.cardinality();
    std::vector<int> sorted(perm);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i)
            throw Error(ErrorCode::InvalidSelector, "not a permutation of 0..n-1");

    const Rational l0(c.temperament(), n);
    Rational num;
    Rational den;
    for (int k = 0; k < n; ++k) {
        const Rational a = Rational(c[static_cast<std::size_t>(k)]) - l0;
        const Rational b = Rational(c[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]) - l0;
        num += a * b;
        den += a * a;
    }
    if (den == Rational(0))
        throw Error(ErrorCode::DegenerateAtOrthocentre, "chord coincides with the orthocentre");
    return num / den;
}

bool is_collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p)
{
    require_same_dimension(a, b);
    require_same_dimension(a, p);
    RationalPoint d(a.size());
    RationalPoint q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = b[i] - a[i];
        q[i] = p[i] - a[i];
    }
    if (is_zero(d))
        throw Error(ErrorCode::ZeroDirection, "line through coincident points");
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (q[i] * d[j] != q[j] * d[i])
                return false;
    return true;
}

bool orthocentre_alignment(const LatticeSimplex& s, const FaceSelector& f)
{
    validate_selector(f, s.n);
    if (static_cast<int>(f.indices.size()) == s.n)
        throw Error(ErrorCode::InvalidSelector, "face must be a proper subset");
    FaceSelector complement;
    for (int i = 1; i <= s.n; ++i)
        if (!std::binary_search(f.indices.begin(), f.indices.end(), i))
            complement.indices.push_back(i);
    return is_collinear(face_orthocentre(s, f), face_orthocentre(s, complement), orthocentre(s).point);
}

std::vector<RationalPoint> shell_vertices(int L, int n, int k)
{
    TemperamentParams{L};
    if (n < 1)
        throw Error(ErrorCode::CardinalityOutOfRange, "shell needs n >= 1");
    if (k < 0 || k * n > L)
        throw Error(ErrorCode::ShellOutOfRange, "shell " + std::to_string(k) + " outside [0, L/n]");
    std::vector<RationalPoint> out;
    for (int i = 0; i < n; ++i) {
        RationalPoint v(static_cast<std::size_t>(n), Rational(k));
        v[static_cast<std::size_t>(i)] += Rational(L - k * n);
        out.push_back(std::move(v));
    }
    return out;
}

PalindromeLocus palindrome_locus(int L, int n, int k)
{
    TemperamentParams{L};
    if (n < 3)
        throw Error(ErrorCode::CardinalityTooSmall, "palindrome locus needs n >= 3");
    if (k < 1 || k * n > L)
        throw Error(ErrorCode::ShellOutOfRange, "shell " + std::to_string(k) + " outside [1, L/n]");

    PalindromeLocus loc;
    loc.L = L;
    loc.n = n;
    loc.k = k;
    const int slack = L - k * n;
    const auto sz = static_cast<std::size_t>(n);
    const Rational half_slack(slack, 2);

    if (n % 2 == 0) {
        // 0-based positions of the a pair and the central b pair
        const std::size_t a1 = sz / 2 - 2, a2 = sz / 2 + 1, b1 = sz / 2 - 1, b2 = sz / 2;
        auto point = [&](const Rational& a, const Rational& b) {
            RationalPoint p(sz, Rational(k));
            p[a1] = p[a2] = a;
            p[b1] = p[b2] = b;
            return p;
        };
        loc.endpoint_a = point(Rational(k) + half_slack, Rational(k));
        loc.endpoint_b = point(Rational(k), Rational(k) + half_slack);
        if (slack % 2 == 0) {
            const int ab = 2 * k + slack / 2;
            for (int a = k + 1; a < k + slack / 2; ++a) {
                std::vector<int> parts(sz, k);
                parts[a1] = parts[a2] = a;
                parts[b1] = parts[b2] = ab - a;
                loc.interior_points.push_back(Chord::from_trusted(std::move(parts), L));
            }
        }
    } else {
        const std::size_t mid = sz / 2, a1 = mid - 1, a2 = mid + 1;
        auto point = [&](const Rational& a, const Rational& c) {
            RationalPoint p(sz, Rational(k));
            p[a1] = p[a2] = a;
            p[mid] = c;
            return p;
        };
        loc.endpoint_a = point(Rational(k), Rational(k + slack));
        loc.endpoint_b = point(Rational(k) + half_slack, Rational(k));
        const int two_a_plus_c = slack + 3 * k;
        for (int a = k + 1; two_a_plus_c - 2 * a > k; ++a) {
            std::vector<int> parts(sz, k);
            parts[a1] = parts[a2] = a;
            parts[mid] = two_a_plus_c - 2 * a;
            loc.interior_points.push_back(Chord::from_trusted(std::move(parts), L));
        }
    }
    return loc;
}

std::map<int, Count> repeating_points_by_stabiliser(int L, int n)
{
    TemperamentParams{L};
    if (n < 1 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [1, L]");
    // lattice points on the subspace x_i = x_{i+d}: compositions of L d / n into d parts
    auto on_subspace = [&](int d) -> Count { return (L * d) % n == 0 ? binomial(L * d / n - 1, d - 1) : 0; };
    // exact period d: remove the points of every smaller period e | d
    std::map<int, Count> exact;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        Count points = on_subspace(d);
        for (const auto& [e, count] : exact)
            if (d % e == 0)
                points -= count;
        exact[d] = points;
    }
    std::map<int, Count> out;
    for (const auto& [d, points] : exact)
        if (d < n && points > 0)
            out[n / d] = points;
    return out;
}

Count geometric_repeating_count(int L, int n)
{
    Count total = 0;
    for (const auto& [g, points] : repeating_points_by_stabiliser(L, n))
        total += (g - 1) * points;
    return total;
}

} // namespace chordenum
