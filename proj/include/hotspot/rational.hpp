#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hotspot/bigint.hpp"

namespace hotspot {

/// Exact rational number. Always normalized: positive denominator,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}
    Rational(BigInt num, BigInt den);  // throws std::domain_error on zero denominator

    /// Accepts "3", "-7/2", "0.4", ".25", "2.". Exact decimal-to-fraction.
    static Rational parse(std::string_view text);  // throws std::invalid_argument

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;
    Rational operator/(const Rational& rhs) const;  // throws std::domain_error on zero
    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
    Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

    Rational pow(std::int64_t exponent) const;  // negative exponent reciprocates

    bool operator==(const Rational& rhs) const;
    std::strong_ordering operator<=>(const Rational& rhs) const;

    /// Round-to-nearest within ~2 ulp.
    double to_double() const;

    /// "n/d", or just "n" when the denominator is 1.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

}  // namespace hotspot
