#pragma once

#include <chordenum/chord.hpp>
#include <chordenum/rational.hpp>

#include <map>
#include <vector>

namespace chordenum {

using RationalPoint = std::vector<Rational>;

/// Points of the hyperplane x_1 + ... + x_n = L cut off by the positive
/// orthant; vertex i sits at L on axis i.
struct LatticeSimplex {
    int L = 12;
    int n = 1;

    LatticeSimplex(int scale, int dimension);
    RationalPoint vertex(int i) const;  ///< 1-based
};

/// 1-based strictly increasing index set naming a (j-1)-face.
struct FaceSelector {
    std::vector<int> indices;
};

/// C(n, j): number of (j-1)-faces of an n-vertex simplex.
Count face_count(int n, int j);

struct Orthocentre {
    RationalPoint point;
    bool integral = false;
};

/// (L/n, ..., L/n); integral iff n divides L.
Orthocentre orthocentre(const LatticeSimplex& s);

/// L/j on the selected axes, 0 elsewhere. Throws InvalidSelector.
RationalPoint face_orthocentre(const LatticeSimplex& s, const FaceSelector& f);

/// The recursion over stacked (n-1)-dimensional layers that counts the
/// interior lattice points, with every intermediate value kept.
struct LatticeRecursion {
    int L = 12;
    int n = 1;
    /// tau[m][k] for m = 0..n-2 and k = 1..L-n+2; tau[m][0] is unused.
    std::vector<std::vector<Count>> tau;
    Count total = 0;

    /// tau_k^(m); zero outside the stored range (and tau^(-1) == 0).
    Count at(int k, int m) const;
};

/// N_C(L, n) by summing layers: tau_k^(m) = tau_{k+1}^(m) - tau_{k+1}^(m-1)
/// from the top value tau_{L-n+2}^(n-2) = N_C(n-1) down to k = 1, then
/// N_C(n) = sum of tau_k^(n-2) for k = 1..L-n+1.
LatticeRecursion interior_lattice_count_recursive(int L, int n);

/// n [N_C(n-1) + N_C(n-2)] for n >= 2, zero otherwise.
Count surface_lattice_count_formula(int L, int n);

/// n [N_C(n-1) + N_C(n-2)] + N_C(n).
Count volume_lattice_count_formula(int L, int n);

enum class Positivity { Positive, Nonnegative };

/// Stars-and-bars count of solutions of x_1 + ... + x_n = L.
Count lattice_count_oracle(int L, int n, Positivity positivity);

/// Nonnegative minus positive solutions.
Count boundary_lattice_count_oracle(int L, int n);

/// Membership in the i-th congruent region: x_i <= L/n and every
/// coordinate in [1, L - (n - 1)]. i is 1-based.
bool in_congruent_region(const RationalPoint& x, int L, int i);
bool in_congruent_region(const Chord& c, int i);

/// Squared Euclidean distance. Throws DimensionMismatch.
Rational distance(const RationalPoint& a, const RationalPoint& b);

/// Coordinate-wise mean. Throws DimensionMismatch.
RationalPoint midpoint(const RationalPoint& a, const RationalPoint& b);

RationalPoint to_point(const Chord& c);

/// cos^2 of the angle between two directions. Throws ZeroDirection.
Rational line_angle_cosine(const RationalPoint& dir_a, const RationalPoint& dir_b);

/// sin^2 of the angle between a line and a hyperplane with the given
/// normal, i.e. the cos^2 of line and normal.
Rational line_plane_sine(const RationalPoint& dir, const RationalPoint& normal);

/// sum (l_k - l0)(l_perm(k) - l0) / sum (l_k - l0)^2 with l0 = L/n; perm is
/// 0-based. Throws DegenerateAtOrthocentre or InvalidSelector.
Rational permutation_angle_cosine(const Chord& c, const std::vector<int>& perm);

/// True iff p lies on the line through a and b (a != b).
bool is_collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p);

/// Orthocentre of s on the line joining the orthocentres of f and of its
/// complement. f must be a proper non-empty subset.
bool orthocentre_alignment(const LatticeSimplex& s, const FaceSelector& f);

/// Vertices k + delta_{ij} (L - kn) of the k-th inner shell, 0 <= k <= L/n.
std::vector<RationalPoint> shell_vertices(int L, int n, int k);

/// Line of palindromic points inside shell k. Even n: the outer coordinates
/// equal k, the two pairs next to the centre are (a, b) with
/// a + b = 2k + (L - kn)/2. Odd n: the pair flanking the centre is a, the
/// centre c, 2a + c = L - kn + 3k, the rest k.
struct PalindromeLocus {
    int L = 12;
    int n = 3;
    int k = 1;
    RationalPoint endpoint_a;
    RationalPoint endpoint_b;
    std::vector<Chord> interior_points;  ///< integer points strictly between the endpoints
};

/// Throws CardinalityTooSmall for n < 3 and ShellOutOfRange unless
/// 1 <= k <= L/n.
PalindromeLocus palindrome_locus(int L, int n, int k);

/// Sum over all n-chords of (stabiliser size under rotation - 1); the
/// geometric form of Delta N.
Count geometric_repeating_count(int L, int n);

/// Points fixed by the rotation subgroup of order g lie on the line
/// x_i = x_{i + n/g}; returns how many n-chords have stabiliser order g,
/// keyed by g > 1.
std::map<int, Count> repeating_points_by_stabiliser(int L, int n);

} // namespace chordenum
