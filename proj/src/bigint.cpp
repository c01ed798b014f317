#include "hotspot/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hotspot {

namespace {

constexpr std::uint64_t kLimbBase = 1ull << 32;

}  // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on INT64_MIN
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("BigInt: empty digit string");
    BigInt out;
    const BigInt chunk_scale(1000000000);  // 10^9 per chunk
    std::uint32_t chunk = 0;
    int chunk_len = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit");
        chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
        if (++chunk_len == 9) {
            out = out * chunk_scale + BigInt(static_cast<std::int64_t>(chunk));
            chunk = 0;
            chunk_len = 0;
        }
    }
    if (chunk_len > 0) {
        std::int64_t scale = 1;
        for (int i = 0; i < chunk_len; ++i) scale *= 10;
        out = out * BigInt(scale) + BigInt(static_cast<std::int64_t>(chunk));
    }
    if (sign < 0 && !out.is_zero()) out.sign_ = -1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out;
    out.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out.push_back(static_cast<std::uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kLimbBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.sign_ = sign_;
        out.limbs_ = add_mag(limbs_, rhs.limbs_);
    } else {
        int c = cmp_mag(limbs_, rhs.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            out.sign_ = sign_;
            out.limbs_ = sub_mag(limbs_, rhs.limbs_);
        } else {
            out.sign_ = rhs.sign_;
            out.limbs_ = sub_mag(rhs.limbs_, limbs_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt out;
    out.sign_ = sign_ * rhs.sign_;
    out.limbs_ = mul_mag(limbs_, rhs.limbs_);
    out.trim();
    return out;
}

// Knuth algorithm D on 32-bit limbs with 64-bit trial quotients.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& quot,
                        std::vector<std::uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (cmp_mag(num, den) < 0) {
        rem = num;
        return;
    }
    if (den.size() == 1) {
        std::uint64_t d = den[0];
        quot.assign(num.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = num.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | num[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        return;
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = std::countl_zero(den.back());
    auto shl = [shift](const std::vector<std::uint32_t>& v, bool extra) {
        std::vector<std::uint32_t> out(v.size() + (extra ? 1 : 0), 0);
        if (shift == 0) {
            std::copy(v.begin(), v.end(), out.begin());
            return out;
        }
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << shift) | carry;
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) >> (32 - shift));
        }
        if (extra) out[v.size()] = carry;
        return out;
    };
    std::vector<std::uint32_t> u = shl(num, true);
    std::vector<std::uint32_t> v = shl(den, false);
    const std::size_t n = v.size();
    const std::size_t m = u.size() - 1 - n;
    quot.assign(m + 1, 0);

    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t hi = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = hi / vtop;
        std::uint64_t rhat = hi % vtop;
        if (qhat >= kLimbBase) {
            qhat = kLimbBase - 1;
            rhat = hi - qhat * vtop;
        }
        while (rhat < kLimbBase && qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t d = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
            if (d < 0) {
                d += static_cast<std::int64_t>(kLimbBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(d);
        }
        std::int64_t top = static_cast<std::int64_t>(u[j + n]) -
                           static_cast<std::int64_t>(carry) - borrow;
        if (top < 0) {
            // trial quotient one too large: add the divisor back
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            u[j + n] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(top) + c2);
        } else {
            u[j + n] = static_cast<std::uint32_t>(top);
        }
        quot[j] = static_cast<std::uint32_t>(qhat);
    }

    // denormalize the remainder
    rem.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    if (shift) {
        std::uint32_t carry = 0;
        for (std::size_t i = rem.size(); i-- > 0;) {
            std::uint32_t cur = rem[i];
            rem[i] = (cur >> shift) | carry;
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cur) << (32 - shift));
        }
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt::DivMod BigInt::divmod(const BigInt& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("BigInt: division by zero");
    DivMod out;
    if (is_zero()) return out;
    std::vector<std::uint32_t> q, r;
    divmod_mag(limbs_, divisor.limbs_, q, r);
    out.quot.limbs_ = std::move(q);
    out.quot.sign_ = out.quot.limbs_.empty() ? 0 : sign_ * divisor.sign_;
    out.rem.limbs_ = std::move(r);
    out.rem.sign_ = out.rem.limbs_.empty() ? 0 : sign_;
    return out;
}

BigInt BigInt::operator/(const BigInt& rhs) const { return divmod(rhs).quot; }
BigInt BigInt::operator%(const BigInt& rhs) const { return divmod(rhs).rem; }

BigInt BigInt::shifted_left(std::size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    const std::size_t limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    BigInt out;
    out.sign_ = sign_;
    out.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        out.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
        out.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    out.trim();
    return out;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
    if (is_zero()) return *this;
    const std::size_t limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt out;
    out.sign_ = sign_;
    out.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size()) {
            v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        }
        out.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    out.trim();
    return out;
}

BigInt BigInt::pow(std::uint64_t exponent) const {
    BigInt base = *this;
    BigInt out(1);
    while (exponent) {
        if (exponent & 1) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && limbs_ == rhs.limbs_;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(limbs_, rhs.limbs_);
    if (sign_ < 0) c = -c;
    return c <=> 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

BigInt::Mantissa BigInt::top64() const {
    if (is_zero()) return {0, 0};
    const std::size_t bits = bit_length();
    std::uint64_t mant = 0;
    if (bits <= 64) {
        for (std::size_t i = limbs_.size(); i-- > 0;) mant = (mant << 32) | limbs_[i];
        mant <<= (64 - bits);
    } else {
        BigInt top = shifted_right(bits - 64);
        for (std::size_t i = top.limbs_.size(); i-- > 0;) mant = (mant << 32) | top.limbs_[i];
    }
    return {mant, static_cast<std::int64_t>(bits) - 64};
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    Mantissa m = top64();
    double out = std::ldexp(static_cast<double>(m.mant), static_cast<int>(m.exp2));
    return sign_ < 0 ? -out : out;
}

bool BigInt::fits_uint64() const {
    return sign_ >= 0 && bit_length() <= 64;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigInt: does not fit uint64");
    std::uint64_t out = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) out = (out << 32) | limbs_[i];
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
    BigInt cur = abs();
    const BigInt base(1000000000);
    while (!cur.is_zero()) {
        DivMod dm = cur.divmod(base);
        chunks.push_back(dm.rem.is_zero() ? 0u : dm.rem.limbs_[0]);
        cur = std::move(dm.quot);
    }
    std::string out = sign_ < 0 ? "-" : "";
    out += std::to_string(chunks.back());
    char buf[16];
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
        out += buf;
    }
    return out;
}

}  // namespace hotspot
