#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hotspot {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
///
/// Covers what exact cylinder arithmetic needs: ring operations, divmod,
/// gcd, shifts, decimal I/O and a faithful double conversion. Magnitudes in
/// this project stay modest (a few thousand bits), so all algorithms are
/// schoolbook.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_decimal(std::string_view text);  // throws std::invalid_argument

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;  // truncated toward zero
    BigInt operator%(const BigInt& rhs) const;  // sign follows dividend

    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    /// Quotient truncated toward zero, remainder with the dividend's sign.
    struct DivMod;
    DivMod divmod(const BigInt& divisor) const;  // throws std::domain_error on zero divisor

    BigInt shifted_left(std::size_t bits) const;
    BigInt shifted_right(std::size_t bits) const;

    BigInt pow(std::uint64_t exponent) const;
    static BigInt gcd(BigInt a, BigInt b);  // nonnegative

    bool operator==(const BigInt& rhs) const;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    std::size_t bit_length() const;  // 0 for zero

    /// Nearest double (within ~1 ulp); +/-inf on overflow.
    double to_double() const;

    /// Top 64 bits of the magnitude and the exponent such that
    /// |*this| ~= mant * 2^exp2 with mant in [2^63, 2^64). Zero -> {0, 0}.
    struct Mantissa {
        std::uint64_t mant;
        std::int64_t exp2;
    };
    Mantissa top64() const;

    std::uint64_t to_uint64() const;  // throws std::overflow_error if out of range
    bool fits_uint64() const;

    std::string to_string() const;

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> limbs_;   // little-endian, no leading zero limb; empty iff zero

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& num,
                           const std::vector<std::uint32_t>& den,
                           std::vector<std::uint32_t>& quot,
                           std::vector<std::uint32_t>& rem);

    friend class Rational;
};

struct BigInt::DivMod {
    BigInt quot;
    BigInt rem;
};

}  // namespace hotspot
