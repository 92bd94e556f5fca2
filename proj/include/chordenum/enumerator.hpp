#pragma once

#include <chordenum/chord.hpp>
#include <chordenum/rational.hpp>

#include <iterator>
#include <vector>

namespace chordenum {

/// Exact binomial coefficient; zero when k < 0 or k > n.
Count binomial(int n, int k);

/// Lazy lexicographic sequence of every n-part composition of L.
///
/// Iteration keeps one working tuple; advancing finds the rightmost
/// non-final part that can grow by taking a unit from the tail, bumps it,
/// and resets the tail to its lexicographically smallest shape (all ones
/// except the final part).
class ChordStream {
public:
    ChordStream(int L, int n);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Chord;
        using difference_type = std::ptrdiff_t;
        using pointer = const Chord*;
        using reference = Chord;

        iterator() = default;
        Chord operator*() const { return Chord::from_trusted(parts_, L_); }
        const std::vector<int>& parts() const noexcept { return parts_; }
        iterator& operator++();
        iterator operator++(int)
        {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b)
        {
            return a.done_ == b.done_ && (a.done_ || a.parts_ == b.parts_);
        }

    private:
        friend class ChordStream;
        iterator(int L, int n);

        std::vector<int> parts_;
        int L_ = 0;
        bool done_ = true;
    };

    iterator begin() const { return iterator(L_, n_); }
    iterator end() const { return iterator(); }
    int temperament() const noexcept { return L_; }
    int cardinality() const noexcept { return n_; }
    /// Equals count_distinct(L, n).
    Count size() const { return binomial(L_ - 1, n_ - 1); }

private:
    int L_;
    int n_;
};

/// All compositions of L into n positive parts, in lexicographic order.
/// Throws CardinalityOutOfRange unless 1 <= n <= L.
std::vector<Chord> enumerate_chords(int L, int n);

/// Number of n-chords, C(L-1, n-1); zero at n = 0.
Count count_distinct(int L, int n);

/// C(L, n) / L. At n = 0 this is the limiting value 1/L rather than a
/// division by zero.
Rational fractional_distinct(int L, int n);

/// floor(fractional_distinct(L, n)).
Count integer_part_distinct(int L, int n);

/// Conjugate point of a chord with n >= 2: the strictly decreasing tuple
/// (L - l1, l2 + ... + l_{n-1}, l3 + ... + l_{n-1}, ..., l_{n-1}).
std::vector<int> conjugate_point(const Chord& c);

} // namespace chordenum
