#pragma once

#include <chordenum/error.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace chordenum {

using Count = std::int64_t;

/// Largest temperament for which every count fits the 64-bit Count type.
inline constexpr int kMaxTemperament = 64;

/// Number of equal steps per octave (12 for the usual chromatic scale).
struct TemperamentParams {
    int L = 12;

    explicit TemperamentParams(int steps = 12) : L(steps)
    {
        if (steps < 1 || steps > kMaxTemperament)
            throw Error(ErrorCode::InvalidTemperament,
                        "temperament must lie in [1, " + std::to_string(kMaxTemperament) + "], got " +
                            std::to_string(steps));
    }
};

enum class SymmetryMode { Cyclic, Dihedral };

std::string_view to_string(SymmetryMode mode) noexcept;

/// An n-chord: an ordered composition of L into positive interval steps.
/// Equality is positional, so rotations of one chord are distinct values.
class Chord {
public:
    Chord(std::vector<int> parts, TemperamentParams params);
    Chord(std::initializer_list<int> parts, TemperamentParams params = TemperamentParams{})
        : Chord(std::vector<int>(parts), params) {}

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int cardinality() const noexcept { return static_cast<int>(parts_.size()); }
    int temperament() const noexcept { return L_; }
    int operator[](std::size_t i) const noexcept { return parts_[i]; }

    friend bool operator==(const Chord& a, const Chord& b) { return a.L_ == b.L_ && a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Chord& a, const Chord& b)
    {
        if (auto c = a.L_ <=> b.L_; c != 0)
            return c;
        return a.parts_ <=> b.parts_;
    }

    /// "{1,2,3,6}"
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Chord& c) { return os << c.to_string(); }

    /// Skips validation; callers guarantee the invariants already hold.
    static Chord from_trusted(std::vector<int> parts, int L)
    {
        return Chord(std::move(parts), L, Trusted{});
    }

private:
    struct Trusted {};
    Chord(std::vector<int> parts, int L, Trusted) : parts_(std::move(parts)), L_(L) {}

    std::vector<int> parts_;
    int L_;
};

/// Validating constructor in free-function form.
Chord new_chord(std::vector<int> parts, TemperamentParams params = TemperamentParams{});

/// Left rotation by k positions; k is reduced modulo n and may be negative.
Chord transpose(const Chord& c, long k);

/// Order reversal.
Chord reflect(const Chord& c);

/// Canonical representative of the rotation (Cyclic) or rotation+reflection
/// (Dihedral) class: the member whose last part is largest, ties broken by
/// the lexicographically smallest full tuple.
Chord prime_form(const Chord& c, SymmetryMode mode);

/// Value -> multiplicity pairs, sorted by value.
struct ChordType {
    struct Entry {
        int value;
        int multiplicity;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    friend bool operator==(const ChordType&, const ChordType&) = default;
    /// "1^2 5^2"
    std::string to_string() const;
};

ChordType chord_type(const Chord& c);

} // namespace chordenum
