#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hbraces {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}
    Scalar(int value) : value_(static_cast<long>(value)) {}
    Scalar(long numerator, long denominator);
    explicit Scalar(mpq_class value);

    /// Accepts "p/q" or a plain integer, with an optional leading sign.
    static Scalar parse(std::string_view text);
    static Scalar factorial(unsigned n);

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const;

    std::string numerator_string() const;
    std::string denominator_string() const;
    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    const mpq_class& raw() const { return value_; }

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& out, const Scalar& s);

/// (-1)^k as a Scalar.
inline Scalar sign_power(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

} // namespace hbraces
