#pragma once

#include <chordenum/error.hpp>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace chordenum {

/// 128-bit intermediate for exact products of 64-bit values.
__extension__ typedef __int128 Wide;

/// Exact rational number, always stored reduced with a positive denominator.
/// Intermediate products are widened to 128 bits; results that do not fit
/// back into 64 bits raise ErrorCode::Overflow.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    /// Largest integer not greater than the value.
    std::int64_t floor() const noexcept
    {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0)
            --q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                         static_cast<Wide>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_,
                         static_cast<Wide>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from_wide(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw Error(ErrorCode::InternalInconsistency, "rational division by zero");
        return from_wide(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
    }
    Rational operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
        const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is one.
    std::string to_string() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Inverse of to_string(); accepts "p" and "p/q".
    static Rational parse(const std::string& text)
    {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(std::stoll(text));
            return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InternalInconsistency, "malformed rational '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static Rational from_wide(Wide num, Wide den)
    {
        if (den == 0)
            throw Error(ErrorCode::InternalInconsistency, "zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide a = num < 0 ? -num : num;
        Wide b = den;
        while (b != 0) {
            const Wide t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr Wide lim = INT64_MAX;
        if (num > lim || num < -lim || den > lim)
            throw Error(ErrorCode::Overflow, "rational value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace chordenum
