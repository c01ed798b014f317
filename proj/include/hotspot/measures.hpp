#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hotspot/rational.hpp"
#include "hotspot/word.hpp"

namespace hotspot {

/// A measure-like quantity: exact rational where the model permits,
/// otherwise a certified interval value +/- error.
class MeasureValue {
public:
    /// Exact zero.
    MeasureValue() = default;

    static MeasureValue exact(Rational r);
    static MeasureValue certified(double value, double abs_error);

    bool is_exact() const { return exact_; }
    const Rational& rational() const;  // throws std::logic_error when not exact
    double value() const { return value_; }
    double error() const { return error_; }
    double lo() const { return value_ - error_; }
    double hi() const { return value_ + error_; }

    MeasureValue operator+(const MeasureValue& rhs) const;
    MeasureValue operator-(const MeasureValue& rhs) const;
    MeasureValue operator*(const MeasureValue& rhs) const;

private:
    bool exact_ = true;
    Rational rat_;
    double value_ = 0.0;
    double error_ = 0.0;
};

/// Convergence check and value of the series sum_a p_a^(1-eta0).
struct TailSeries {
    bool converges = false;
    double value_or_bound = 0.0;   // sum when convergent, +inf otherwise
    double remainder_bound = 0.0;  // certified bound on the reported sum's error
};

/// Probability vector on the digits 1,2,3,... given by an analytic spec, so
/// that masses, cdf values, quantiles and tail sums all have closed forms.
class ProbabilityVector {
public:
    /// p_a = (1-ratio) * ratio^(a-1), 0 < ratio < 1.
    static ProbabilityVector geometric(Rational ratio);
    /// p_a = a^(-s) / zeta(s), s > 1.
    static ProbabilityVector zeta(double s);
    /// Explicit head masses, remaining mass spread as a geometric tail with
    /// the given ratio. Head entries must be nonnegative with sum <= 1.
    static ProbabilityVector explicit_finite(std::vector<Rational> head,
                                             Rational tail_ratio = Rational(1, 2));

    /// Digits larger than this saturate the quantile map. Only reachable
    /// for heavy-tailed zeta specs, where the far tail extends past uint64.
    static constexpr Digit kQuantileDigitCap = 1ull << 62;

    MeasureValue mass(Digit a) const;
    /// P(digit <= a); cdf(0) = 0.
    double cdf(Digit a) const;
    /// P(digit > a), exact when the spec is rational.
    MeasureValue tail_mass(Digit a) const;
    /// Smallest a with u < cdf(a); the inverse-cdf sampling map. Returns
    /// kQuantileDigitCap when the true digit would exceed it.
    Digit quantile(double u) const;

    /// Whether masses are exact rationals.
    bool is_exact() const;

    TailSeries tail_series(double eta0) const;  // throws std::invalid_argument unless 0 < eta0 < 1

    /// Stable short description, e.g. "geometric(1/2)".
    std::string describe() const;

    enum class Kind { geometric, zeta, explicit_finite };
    Kind kind() const { return kind_; }
    double zeta_exponent() const { return zeta_s_; }
    const Rational& geometric_ratio() const { return ratio_; }
    const std::vector<Rational>& head() const { return head_; }
    const Rational& tail_ratio() const { return ratio_; }

private:
    ProbabilityVector() = default;

    Kind kind_ = Kind::geometric;
    Rational ratio_;              // geometric ratio, or explicit tail ratio
    std::vector<Rational> head_;  // explicit head masses
    Rational head_rest_;          // 1 - sum(head_), explicit only
    double zeta_s_ = 0.0;
    double zeta_value_ = 0.0;
    std::vector<double> cdf_table_;  // zeta: cdf_table_[a] = P(digit <= a)

    double zeta_tail_from(double a) const;  // sum_{k>=a} k^(-zeta_s_)
};

/// Convergents p_n/q_n of a continued fraction digit word, exact.
struct Convergents {
    BigInt p_prev;  // p_{n-1}
    BigInt q_prev;  // q_{n-1}
    BigInt p;       // p_n
    BigInt q;       // q_n
};
Convergents cf_convergents(const Word& xi);

/// Gauss measure of the continued-fraction cylinder named by xi, via exact
/// interval endpoints from the convergent recurrence. Certified error
/// <= 1e-12 (in practice ~1e-15).
MeasureValue gauss_cylinder_measure(const Word& xi);

/// Gauss measure of an interval with rational endpoints.
MeasureValue gauss_interval_measure(const Rational& a, const Rational& b);

/// Cylinder measures for the two concrete systems: an i.i.d. Bernoulli
/// measure on the integer shift, or the Gauss measure on continued-fraction
/// digit words.
class MeasureModel {
public:
    static MeasureModel bernoulli(ProbabilityVector pv);
    static MeasureModel gauss();

    bool is_bernoulli() const { return pv_.has_value(); }
    bool is_gauss() const { return !pv_.has_value(); }
    const ProbabilityVector& vector() const;  // throws std::logic_error for gauss

    MeasureValue cylinder_measure(const Word& xi) const;

    /// Measure of {x in [xi] : digit |xi|+1 of x exceeds cutoff}; the exact
    /// residual left after truncating the child decomposition of [xi].
    MeasureValue child_tail_mass(const Word& xi, Digit cutoff) const;

    std::string describe() const;

private:
    MeasureModel() = default;
    std::optional<ProbabilityVector> pv_;
};

TailSeries tail_series(const ProbabilityVector& pv, double eta0);

}  // namespace hotspot
