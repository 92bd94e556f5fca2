#include <chordenum/chord.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace chordenum {

std::string_view to_string(SymmetryMode mode) noexcept
{
    return mode == SymmetryMode::Cyclic ? "cyclic" : "dihedral";
}

Chord::Chord(std::vector<int> parts, TemperamentParams params) : parts_(std::move(parts)), L_(params.L)
{
    if (parts_.empty())
        throw Error(ErrorCode::EmptyChord, "a chord needs at least one part");
    if (static_cast<int>(parts_.size()) > L_)
        throw Error(ErrorCode::CardinalityOverflow,
                    std::to_string(parts_.size()) + " parts exceed temperament " + std::to_string(L_));
    long sum = 0;
    for (int p : parts_) {
        if (p < 1)
            throw Error(ErrorCode::NonPositivePart, "part " + std::to_string(p) + " is not positive");
        sum += p;
    }
    if (sum != L_)
        throw Error(ErrorCode::SumMismatch,
                    "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(L_));
}

std::string Chord::to_string() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += '}';
    return out;
}

Chord new_chord(std::vector<int> parts, TemperamentParams params)
{
    return Chord(std::move(parts), params);
}

Chord transpose(const Chord& c, long k)
{
    const long n = c.cardinality();
    const long shift = ((k % n) + n) % n;
    std::vector<int> out(c.vec());
    std::rotate(out.begin(), out.begin() + shift, out.end());
    return Chord::from_trusted(std::move(out), c.temperament());
}

Chord reflect(const Chord& c)
{
    std::vector<int> out(c.vec().rbegin(), c.vec().rend());
    return Chord::from_trusted(std::move(out), c.temperament());
}

namespace {

// Prime-form order: larger last part wins, then lexicographically smaller.
bool precedes(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.back() != b.back())
        return a.back() > b.back();
    return a < b;
}

void consider_rotations(const std::vector<int>& seq, std::vector<int>& best)
{
    std::vector<int> rot(seq);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (precedes(rot, best))
            best = rot;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
}

} // namespace

Chord prime_form(const Chord& c, SymmetryMode mode)
{
    std::vector<int> best(c.vec());
    consider_rotations(c.vec(), best);
    if (mode == SymmetryMode::Dihedral) {
        const std::vector<int> reversed(c.vec().rbegin(), c.vec().rend());
        consider_rotations(reversed, best);
    }
    return Chord::from_trusted(std::move(best), c.temperament());
}

std::string ChordType::to_string() const
{
    std::string out;
    for (const auto& e : entries) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e.value) + "^" + std::to_string(e.multiplicity);
    }
    return out;
}

ChordType chord_type(const Chord& c)
{
    std::map<int, int> counts;
    for (int p : c.parts())
        ++counts[p];
    ChordType t;
    for (const auto& [value, mult] : counts)
        t.entries.push_back({value, mult});
    return t;
}

} // namespace chordenum
