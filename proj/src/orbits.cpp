#include <chordenum/enumerator.hpp>
#include <chordenum/orbits.hpp>

#include <algorithm>

namespace chordenum {

namespace {

Orbit make_orbit(const Chord& representative)
{
    Orbit o{representative, {}, 0, 0, false};
    const int n = representative.cardinality();
    for (int k = 0; k < n; ++k)
        o.members.push_back(transpose(representative, k));
    std::sort(o.members.begin(), o.members.end());
    o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
    o.size = static_cast<int>(o.members.size());
    o.deficit = n - o.size;
    o.reflection_invariant = is_reflection_invariant(o);
    return o;
}

} // namespace

std::vector<Orbit> cyclic_orbits(int L, int n)
{
    std::map<Chord, int> seen;  // prime form -> number of chords mapped to it
    ChordStream stream(L, n);
    if (stream.size() > kMaxOrbitChords)
        throw Error(ErrorCode::ProblemTooLarge, std::to_string(stream.size()) + " chords exceed the orbit enumeration cap of " +
                                                    std::to_string(kMaxOrbitChords));
    for (auto it = stream.begin(); it != stream.end(); ++it)
        ++seen[prime_form(*it, SymmetryMode::Cyclic)];

    std::vector<Orbit> out;
    out.reserve(seen.size());
    for (const auto& [rep, hits] : seen) {
        out.push_back(make_orbit(rep));
        if (out.back().size != hits)
            throw Error(ErrorCode::InternalInconsistency,
                        "orbit of " + rep.to_string() + " has " + std::to_string(out.back().size) +
                            " rotations but " + std::to_string(hits) + " chords map to it");
    }
    return out;
}

Count repeating_count_bruteforce(int L, int n)
{
    Count total = 0;
    for (const auto& o : cyclic_orbits(L, n))
        total += o.deficit;
    return total;
}

bool is_reflection_invariant(const Orbit& o)
{
    const Chord r = reflect(o.representative);
    return std::binary_search(o.members.begin(), o.members.end(), r);
}

OrbitCensus census(int L, int n, SymmetryMode mode)
{
    TemperamentParams{L};
    if (n < 0 || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange, "cardinality " + std::to_string(n) + " outside [0, L]");

    OrbitCensus c;
    c.L = L;
    c.n = n;
    c.mode = mode;

    if (n == 0) {
        // No 0-chords exist; the row is the symmetric completion of n = L.
        c.classes = 1;
        c.distinct_per_n = Rational(1, L);
        c.repeating_per_n = Rational(L - 1, L);
        c.total_per_n = Rational(1);
        if (mode == SymmetryMode::Dihedral) {
            c.invariant_classes = 1;
            c.noninvariant_classes = 0;
            c.dihedral_classes = 1;
        }
        return c;
    }

    c.orbits = cyclic_orbits(L, n);
    Count invariant = 0;
    for (const auto& o : c.orbits) {
        c.distinct += o.size;
        c.repeating += o.deficit;
        if (o.size < n) {
            auto& tally = c.by_period[o.size];
            ++tally.orbits;
            tally.deficit += o.deficit;
        }
        if (o.reflection_invariant)
            ++invariant;
    }
    c.total = c.distinct + c.repeating;
    if (c.total % n != 0)
        throw Error(ErrorCode::InternalInconsistency, "N_M not divisible by n");
    c.classes = c.total / n;
    if (c.classes != static_cast<Count>(c.orbits.size()))
        throw Error(ErrorCode::InternalInconsistency, "N_M / n differs from orbit count");

    c.distinct_per_n = Rational(c.distinct, n);
    c.repeating_per_n = Rational(c.repeating, n);
    c.total_per_n = Rational(c.total, n);

    if (mode == SymmetryMode::Dihedral) {
        const Count others = c.classes - invariant;
        if (others % 2 != 0)
            throw Error(ErrorCode::InternalInconsistency, "non-invariant classes do not pair up");
        c.invariant_classes = invariant;
        c.noninvariant_classes = others;
        c.dihedral_classes = others / 2 + invariant;
    }
    return c;
}

} // namespace chordenum
