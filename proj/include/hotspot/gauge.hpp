#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hotspot/measures.hpp"

namespace hotspot {

/// Monotone nondecreasing gauge function on [0,1], applied to cylinder
/// measures in the gauge Hausdorff measure and in hypothesis bounds.
///
/// Presets:
///   identity      t
///   power         C * t^e              (e > 0; e = 1-eta in the usual form)
///   exp_sqrt_log  C * t * exp(eta * sqrt(log 1/t)), taken as its monotone
///                 envelope: the raw formula peaks at t = exp(-eta^2/4) and
///                 dips back toward t = 1, so values right of the peak are
///                 clamped to the peak value C * exp(eta^2/4). The t -> 0
///                 asymptotics, which are what hypothesis checks consume,
///                 are unchanged.
///   table         monotone piecewise-linear interpolation
class Gauge {
public:
    static Gauge identity();
    static Gauge power(double exponent, double coeff = 1.0);
    static Gauge exp_sqrt_log(double eta, double coeff = 1.0);
    /// Interpolation points (t, value), t in [0,1]. Throws
    /// std::invalid_argument unless t strictly increasing and values
    /// nondecreasing and nonnegative.
    static Gauge table(std::vector<std::pair<double, double>> points);

    double operator()(double t) const;

    /// Applies the gauge to a measure value; exact for the identity gauge,
    /// otherwise a certified interval obtained from monotonicity.
    MeasureValue apply(const MeasureValue& t) const;

    /// True when phi(t)/t is nonincreasing, which guarantees that replacing
    /// a cover cylinder by its children never lowers the cover cost; the
    /// laminar-cover optimum is then exact, not just an upper bound.
    bool subdivision_safe() const;

    bool is_identity() const { return kind_ == Kind::identity; }

    std::string describe() const;

    enum class Kind { identity, power, exp_sqrt_log, table };
    Kind kind() const { return kind_; }
    double exponent() const { return exponent_; }
    double eta() const { return eta_; }
    double coeff() const { return coeff_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }

private:
    Gauge() = default;
    Kind kind_ = Kind::identity;
    double exponent_ = 1.0;
    double eta_ = 0.0;
    double coeff_ = 1.0;
    std::vector<std::pair<double, double>> points_;
};

}  // namespace hotspot
