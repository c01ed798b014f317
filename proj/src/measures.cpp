#include "hotspot/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hotspot {

namespace {

constexpr std::size_t kZetaTableSize = 4096;

/// sum_{k >= a} k^(-s) by Euler-Maclaurin; accurate to ~1e-18 relative for
/// a >= 64, s > 1.
double power_tail_from(double s, double a) {
    const double f = std::pow(a, -s);
    return a * f / (s - 1.0) + f / 2.0 + s * f / (12.0 * a) -
           s * (s + 1.0) * (s + 2.0) * f / (720.0 * a * a * a);
}

double zeta_value_em(double s) {
    double sum = 0.0;
    for (std::size_t k = 1; k < kZetaTableSize; ++k) {
        sum += std::pow(static_cast<double>(k), -s);
    }
    return sum + power_tail_from(s, static_cast<double>(kZetaTableSize));
}

}  // namespace

MeasureValue MeasureValue::exact(Rational r) {
    MeasureValue out;
    out.exact_ = true;
    out.rat_ = std::move(r);
    out.value_ = out.rat_.to_double();
    out.error_ = std::abs(out.value_) * 1e-15;  // to_double is within ~2 ulp
    return out;
}

MeasureValue MeasureValue::certified(double value, double abs_error) {
    MeasureValue out;
    out.exact_ = false;
    out.value_ = value;
    out.error_ = abs_error;
    return out;
}

const Rational& MeasureValue::rational() const {
    if (!exact_) throw std::logic_error("MeasureValue: not exact");
    return rat_;
}

MeasureValue MeasureValue::operator+(const MeasureValue& rhs) const {
    if (exact_ && rhs.exact_) return exact(rat_ + rhs.rat_);
    return certified(value_ + rhs.value_, error_ + rhs.error_);
}

MeasureValue MeasureValue::operator-(const MeasureValue& rhs) const {
    if (exact_ && rhs.exact_) return exact(rat_ - rhs.rat_);
    return certified(value_ - rhs.value_, error_ + rhs.error_);
}

MeasureValue MeasureValue::operator*(const MeasureValue& rhs) const {
    if (exact_ && rhs.exact_) return exact(rat_ * rhs.rat_);
    return certified(value_ * rhs.value_,
                     std::abs(value_) * rhs.error_ + std::abs(rhs.value_) * error_ +
                         error_ * rhs.error_);
}

ProbabilityVector ProbabilityVector::geometric(Rational ratio) {
    if (ratio <= Rational(0) || ratio >= Rational(1)) {
        throw std::invalid_argument("ProbabilityVector: geometric ratio must be in (0,1)");
    }
    ProbabilityVector out;
    out.kind_ = Kind::geometric;
    out.ratio_ = std::move(ratio);
    return out;
}

ProbabilityVector ProbabilityVector::zeta(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("ProbabilityVector: zeta exponent must be > 1");
    ProbabilityVector out;
    out.kind_ = Kind::zeta;
    out.zeta_s_ = s;
    out.zeta_value_ = zeta_value_em(s);
    out.cdf_table_.assign(kZetaTableSize + 1, 0.0);
    double sum = 0.0;
    for (std::size_t a = 1; a <= kZetaTableSize; ++a) {
        sum += std::pow(static_cast<double>(a), -s);
        out.cdf_table_[a] = sum / out.zeta_value_;
    }
    return out;
}

ProbabilityVector ProbabilityVector::explicit_finite(std::vector<Rational> head,
                                                     Rational tail_ratio) {
    if (tail_ratio <= Rational(0) || tail_ratio >= Rational(1)) {
        throw std::invalid_argument("ProbabilityVector: tail ratio must be in (0,1)");
    }
    Rational sum(0);
    for (const auto& q : head) {
        if (q < Rational(0)) throw std::invalid_argument("ProbabilityVector: negative mass");
        sum += q;
    }
    if (sum > Rational(1)) {
        throw std::invalid_argument("ProbabilityVector: head masses exceed 1");
    }
    ProbabilityVector out;
    out.kind_ = Kind::explicit_finite;
    out.head_ = std::move(head);
    out.ratio_ = std::move(tail_ratio);
    out.head_rest_ = Rational(1) - sum;
    return out;
}

bool ProbabilityVector::is_exact() const { return kind_ != Kind::zeta; }

MeasureValue ProbabilityVector::mass(Digit a) const {
    switch (kind_) {
        case Kind::geometric: {
            // (1 - r) r^(a-1)
            Rational p = (Rational(1) - ratio_) * ratio_.pow(static_cast<std::int64_t>(a - 1));
            return MeasureValue::exact(std::move(p));
        }
        case Kind::zeta: {
            double v = std::pow(static_cast<double>(a), -zeta_s_) / zeta_value_;
            return MeasureValue::certified(v, v * 1e-13);
        }
        case Kind::explicit_finite: {
            if (a <= head_.size()) return MeasureValue::exact(head_[a - 1]);
            std::int64_t j = static_cast<std::int64_t>(a - head_.size());
            Rational p = head_rest_ * (Rational(1) - ratio_) * ratio_.pow(j - 1);
            return MeasureValue::exact(std::move(p));
        }
    }
    throw std::logic_error("unreachable");
}

MeasureValue ProbabilityVector::tail_mass(Digit a) const {
    switch (kind_) {
        case Kind::geometric:
            return MeasureValue::exact(ratio_.pow(static_cast<std::int64_t>(a)));
        case Kind::zeta: {
            double v = power_tail_from(zeta_s_, static_cast<double>(a) + 1.0) / zeta_value_;
            if (a < 64) {
                // near the head the asymptotic expansion is not certified;
                // use 1 - cdf with direct partial sums instead
                double sum = 0.0;
                for (Digit k = 1; k <= a; ++k) {
                    sum += std::pow(static_cast<double>(k), -zeta_s_);
                }
                v = 1.0 - sum / zeta_value_;
            }
            return MeasureValue::certified(v, v * 1e-12 + 1e-15);
        }
        case Kind::explicit_finite: {
            if (a >= head_.size()) {
                std::int64_t j = static_cast<std::int64_t>(a - head_.size());
                return MeasureValue::exact(head_rest_ * ratio_.pow(j));
            }
            Rational sum(0);
            for (Digit b = 1; b <= a; ++b) sum += head_[b - 1];
            return MeasureValue::exact(Rational(1) - sum);
        }
    }
    throw std::logic_error("unreachable");
}

double ProbabilityVector::cdf(Digit a) const {
    if (a == 0) return 0.0;
    switch (kind_) {
        case Kind::geometric:
            return -std::expm1(static_cast<double>(a) * std::log(ratio_.to_double()));
        case Kind::zeta:
            if (a <= kZetaTableSize) return cdf_table_[a];
            return 1.0 - power_tail_from(zeta_s_, static_cast<double>(a) + 1.0) / zeta_value_;
        case Kind::explicit_finite:
            return 1.0 - tail_mass(a).value();
    }
    throw std::logic_error("unreachable");
}

double ProbabilityVector::zeta_tail_from(double a) const { return power_tail_from(zeta_s_, a); }

Digit ProbabilityVector::quantile(double u) const {
    if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("quantile: u must be in [0,1)");
    switch (kind_) {
        case Kind::geometric: {
            const double logr = std::log(ratio_.to_double());
            double guess = std::floor(std::log1p(-u) / logr) + 1.0;
            Digit a = guess < 1.0 ? 1 : static_cast<Digit>(guess);
            while (a > 1 && u < cdf(a - 1)) --a;
            while (u >= cdf(a)) ++a;
            return a;
        }
        case Kind::zeta: {
            if (u < cdf_table_.back()) {
                auto it = std::upper_bound(cdf_table_.begin() + 1, cdf_table_.end(), u);
                return static_cast<Digit>(it - cdf_table_.begin());
            }
            // solve tail_from(a+1) < (1-u) * zeta(s) past the table
            const double target = (1.0 - u) * zeta_value_;
            Digit lo = kZetaTableSize;  // cdf(lo) <= u
            double guess = std::pow(target * (zeta_s_ - 1.0), 1.0 / (1.0 - zeta_s_));
            Digit hi = std::max<Digit>(lo + 1, guess >= static_cast<double>(ProbabilityVector::kQuantileDigitCap)
                                                   ? ProbabilityVector::kQuantileDigitCap
                                                   : static_cast<Digit>(guess) + 2);
            while (hi < ProbabilityVector::kQuantileDigitCap && u >= cdf(hi)) {
                hi = hi > ProbabilityVector::kQuantileDigitCap / 2 ? ProbabilityVector::kQuantileDigitCap : hi * 2;
            }
            if (u >= cdf(hi)) return ProbabilityVector::kQuantileDigitCap;  // saturate: astronomically rare
            while (lo + 1 < hi) {
                Digit mid = lo + (hi - lo) / 2;
                if (u < cdf(mid)) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return hi;
        }
        case Kind::explicit_finite: {
            double acc = 0.0;
            for (std::size_t i = 0; i < head_.size(); ++i) {
                acc += head_[i].to_double();
                if (u < acc) return static_cast<Digit>(i + 1);
            }
            // geometric tail: cdf(k+j) = 1 - rest * ratio^j
            const double rest = head_rest_.to_double();
            if (rest <= 0.0) return static_cast<Digit>(head_.size());  // u < 1 = cdf(head)
            const double logr = std::log(ratio_.to_double());
            double guess = std::floor(std::log((1.0 - u) / rest) / logr) + 1.0;
            std::int64_t j = guess < 1.0 ? 1 : static_cast<std::int64_t>(guess);
            auto tail_cdf = [&](std::int64_t jj) {
                return 1.0 - rest * std::exp(static_cast<double>(jj) * logr);
            };
            while (j > 1 && u < tail_cdf(j - 1)) --j;
            while (u >= tail_cdf(j)) ++j;
            return static_cast<Digit>(head_.size()) + static_cast<Digit>(j);
        }
    }
    throw std::logic_error("unreachable");
}

TailSeries ProbabilityVector::tail_series(double eta0) const {
    if (!(eta0 > 0.0 && eta0 < 1.0)) {
        throw std::invalid_argument("tail_series: eta0 must be in (0,1)");
    }
    const double e = 1.0 - eta0;
    TailSeries out;
    switch (kind_) {
        case Kind::geometric: {
            // sum ((1-r) r^(a-1))^e = (1-r)^e / (1 - r^e)
            const double r = ratio_.to_double();
            out.converges = true;
            out.value_or_bound = std::pow(1.0 - r, e) / (1.0 - std::pow(r, e));
            out.remainder_bound = out.value_or_bound * 1e-13;
            return out;
        }
        case Kind::zeta: {
            // sum (a^-s / zeta(s))^e = zeta(s e) / zeta(s)^e, iff s e > 1
            const double se = zeta_s_ * e;
            if (se <= 1.0) {
                out.converges = false;
                out.value_or_bound = std::numeric_limits<double>::infinity();
                out.remainder_bound = 0.0;
                return out;
            }
            out.converges = true;
            out.value_or_bound = zeta_value_em(se) / std::pow(zeta_value_, e);
            out.remainder_bound = out.value_or_bound * 1e-12;
            return out;
        }
        case Kind::explicit_finite: {
            double sum = 0.0;
            for (const auto& q : head_) {
                if (!q.is_zero()) sum += std::pow(q.to_double(), e);
            }
            const double rest = head_rest_.to_double();
            const double r = ratio_.to_double();
            if (rest > 0.0) {
                sum += std::pow(rest * (1.0 - r), e) / (1.0 - std::pow(r, e));
            }
            out.converges = true;
            out.value_or_bound = sum;
            out.remainder_bound = sum * 1e-13;
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string ProbabilityVector::describe() const {
    switch (kind_) {
        case Kind::geometric:
            return "geometric(" + ratio_.to_string() + ")";
        case Kind::zeta:
            return "zeta(" + std::to_string(zeta_s_) + ")";
        case Kind::explicit_finite: {
            std::string out = "explicit([";
            for (std::size_t i = 0; i < head_.size(); ++i) {
                if (i) out += ",";
                out += head_[i].to_string();
            }
            out += "];tail=" + ratio_.to_string() + ")";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

Convergents cf_convergents(const Word& xi) {
    Convergents c{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    for (Digit d : xi.digits()) {
        BigInt a(static_cast<std::int64_t>(d));
        BigInt p_next = a * c.p + c.p_prev;
        BigInt q_next = a * c.q + c.q_prev;
        c.p_prev = std::move(c.p);
        c.q_prev = std::move(c.q);
        c.p = std::move(p_next);
        c.q = std::move(q_next);
    }
    return c;
}

MeasureValue gauss_interval_measure(const Rational& a, const Rational& b) {
    const Rational& lo = a <= b ? a : b;
    const Rational& hi = a <= b ? b : a;
    // log((1+hi)/(1+lo)) = log1p((hi-lo)/(1+lo)), stable for narrow intervals
    const Rational w = (hi - lo) / (Rational(1) + lo);
    const double wd = w.to_double();
    const double value = std::log1p(wd) / std::numbers::ln2;
    return MeasureValue::certified(value, value * 1e-14 + 1e-18);
}

MeasureValue gauss_cylinder_measure(const Word& xi) {
    if (xi.empty()) return MeasureValue::exact(Rational(1));
    Convergents c = cf_convergents(xi);
    Rational u(c.p, c.q);
    Rational v(c.p + c.p_prev, c.q + c.q_prev);
    return gauss_interval_measure(u, v);
}

MeasureModel MeasureModel::bernoulli(ProbabilityVector pv) {
    MeasureModel out;
    out.pv_ = std::move(pv);
    return out;
}

MeasureModel MeasureModel::gauss() { return MeasureModel(); }

const ProbabilityVector& MeasureModel::vector() const {
    if (!pv_) throw std::logic_error("MeasureModel: no probability vector for gauss");
    return *pv_;
}

MeasureValue MeasureModel::cylinder_measure(const Word& xi) const {
    if (pv_) {
        MeasureValue out = MeasureValue::exact(Rational(1));
        for (Digit d : xi.digits()) out = out * pv_->mass(d);
        return out;
    }
    return gauss_cylinder_measure(xi);
}

MeasureValue MeasureModel::child_tail_mass(const Word& xi, Digit cutoff) const {
    if (pv_) {
        return cylinder_measure(xi) * pv_->tail_mass(cutoff);
    }
    // children [xi b] tile the cylinder interval and accumulate toward the
    // convergent p/q as b grows; the part with b > cutoff is the interval
    // between p/q and the outer endpoint of child cutoff+1
    Convergents c = cf_convergents(xi);
    BigInt m1(static_cast<std::int64_t>(cutoff) + 1);
    Rational limit(c.p, c.q);
    Rational edge(m1 * c.p + c.p_prev, m1 * c.q + c.q_prev);
    return gauss_interval_measure(limit, edge);
}

std::string MeasureModel::describe() const {
    if (pv_) return "bernoulli(" + pv_->describe() + ")";
    return "gauss";
}

TailSeries tail_series(const ProbabilityVector& pv, double eta0) { return pv.tail_series(eta0); }

}  // namespace hotspot
