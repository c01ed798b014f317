#include "hotspot/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hotspot {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt n = BigInt::from_decimal(text.substr(0, slash));
        BigInt d = BigInt::from_decimal(text.substr(slash + 1));
        if (d.is_zero()) throw std::invalid_argument("Rational: zero denominator");
        return Rational(std::move(n), std::move(d));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(BigInt::from_decimal(text), BigInt(1));
    }
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !head.empty() && head[0] == '-';
    std::string digits;
    digits.reserve(head.size() + frac.size());
    for (char c : head) {
        if (c == '+' || c == '-') continue;
        digits.push_back(c);
    }
    for (char c : frac) digits.push_back(c);
    if (digits.empty()) throw std::invalid_argument("Rational: no digits");
    BigInt n = BigInt::from_decimal(digits);
    BigInt d = BigInt(10).pow(frac.size());
    if (negative) n = -n;
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::abs() const {
    Rational out = *this;
    out.num_ = out.num_.abs();
    return out;
}

Rational Rational::operator+(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

Rational Rational::pow(std::int64_t exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw std::domain_error("Rational: zero to negative power");
        Rational inv(den_, num_);
        return inv.pow(-exponent);
    }
    Rational out(1);
    out.num_ = num_.pow(static_cast<std::uint64_t>(exponent));
    out.den_ = den_.pow(static_cast<std::uint64_t>(exponent));
    return out;  // already coprime
}

bool Rational::operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    BigInt::Mantissa n = num_.top64();
    BigInt::Mantissa d = den_.top64();
    long double q = static_cast<long double>(n.mant) / static_cast<long double>(d.mant);
    double out = static_cast<double>(
        std::ldexp(q, static_cast<int>(n.exp2 - d.exp2)));
    return num_.is_negative() ? -out : out;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace hotspot
