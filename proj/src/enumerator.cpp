#include <chordenum/enumerator.hpp>

#include <string>

namespace chordenum {

namespace {

void check_range(int L, int n, int lo)
{
    TemperamentParams{L};
    if (n < lo || n > L)
        throw Error(ErrorCode::CardinalityOutOfRange,
                    "cardinality " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(L) + "]");
}

} // namespace

Count binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    if (2 * k > n)
        k = n - k;
    Wide r = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: r * (n-k+i) / i == C(n-k+i, i)
        r = r * (n - k + i) / i;
        if (r > INT64_MAX)
            throw Error(ErrorCode::Overflow, "C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
    }
    return static_cast<Count>(r);
}

ChordStream::ChordStream(int L, int n) : L_(L), n_(n)
{
    check_range(L, n, 1);
}

ChordStream::iterator::iterator(int L, int n) : parts_(static_cast<std::size_t>(n), 1), L_(L), done_(false)
{
    parts_.back() = L - (n - 1);
}

ChordStream::iterator& ChordStream::iterator::operator++()
{
    const int n = static_cast<int>(parts_.size());
    int tail = parts_.back();
    for (int i = n - 2; i >= 0; --i) {
        // tail = sum of parts_[i+1 .. n-1]; it can give up a unit if it
        // exceeds its minimum of one per part.
        if (tail > n - 1 - i) {
            ++parts_[i];
            for (int j = i + 1; j < n - 1; ++j)
                parts_[j] = 1;
            parts_.back() = tail - 1 - (n - 2 - i);
            return *this;
        }
        tail += parts_[i];
    }
    done_ = true;
    parts_.clear();
    return *this;
}

std::vector<Chord> enumerate_chords(int L, int n)
{
    ChordStream stream(L, n);
    std::vector<Chord> out;
    out.reserve(static_cast<std::size_t>(stream.size()));
    for (auto it = stream.begin(); it != stream.end(); ++it)
        out.push_back(*it);
    return out;
}

Count count_distinct(int L, int n)
{
    check_range(L, n, 0);
    if (n == 0)
        return 0;
    return binomial(L - 1, n - 1);
}

Rational fractional_distinct(int L, int n)
{
    check_range(L, n, 0);
    if (n == 0)
        return Rational(1, L);
    return Rational(binomial(L, n), L);
}

Count integer_part_distinct(int L, int n)
{
    return fractional_distinct(L, n).floor();
}

std::vector<int> conjugate_point(const Chord& c)
{
    const int n = c.cardinality();
    if (n < 2)
        throw Error(ErrorCode::CardinalityTooSmall, "conjugate point needs n >= 2");
    std::vector<int> out(static_cast<std::size_t>(n - 1));
    out[0] = c.temperament() - c[0];
    // S_{k,n-1} = l_k + ... + l_{n-1}, built from the right
    int suffix = 0;
    for (int k = n - 2; k >= 1; --k) {
        suffix += c[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] = suffix;
    }
    return out;
}

} // namespace chordenum
