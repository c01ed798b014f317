#include "hotspot/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hotspot {

Gauge Gauge::identity() { return Gauge(); }

Gauge Gauge::power(double exponent, double coeff) {
    if (!(exponent > 0.0)) throw std::invalid_argument("Gauge: power exponent must be > 0");
    if (!(coeff > 0.0)) throw std::invalid_argument("Gauge: coefficient must be > 0");
    Gauge out;
    out.kind_ = Kind::power;
    out.exponent_ = exponent;
    out.coeff_ = coeff;
    return out;
}

Gauge Gauge::exp_sqrt_log(double eta, double coeff) {
    if (!(eta > 0.0)) throw std::invalid_argument("Gauge: eta must be > 0");
    if (!(coeff > 0.0)) throw std::invalid_argument("Gauge: coefficient must be > 0");
    Gauge out;
    out.kind_ = Kind::exp_sqrt_log;
    out.eta_ = eta;
    out.coeff_ = coeff;
    return out;
}

Gauge Gauge::table(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("Gauge: table needs >= 2 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [t, v] = points[i];
        if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("Gauge: table t outside [0,1]");
        if (!(v >= 0.0)) throw std::invalid_argument("Gauge: table value negative");
        if (i > 0) {
            if (!(t > points[i - 1].first)) {
                throw std::invalid_argument("Gauge: table t not strictly increasing");
            }
            if (v < points[i - 1].second) {
                throw std::invalid_argument("Gauge: table values not monotone");
            }
        }
    }
    Gauge out;
    out.kind_ = Kind::table;
    out.points_ = std::move(points);
    return out;
}

double Gauge::operator()(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("Gauge: argument outside [0,1]");
    switch (kind_) {
        case Kind::identity:
            return t;
        case Kind::power:
            return t == 0.0 ? 0.0 : coeff_ * std::pow(t, exponent_);
        case Kind::exp_sqrt_log: {
            if (t == 0.0) return 0.0;  // right limit
            const double peak_t = std::exp(-eta_ * eta_ / 4.0);
            if (t >= peak_t) return coeff_ * std::exp(eta_ * eta_ / 4.0);
            return coeff_ * t * std::exp(eta_ * std::sqrt(std::log(1.0 / t)));
        }
        case Kind::table: {
            if (t <= points_.front().first) return points_.front().second;
            if (t >= points_.back().first) return points_.back().second;
            auto it = std::upper_bound(points_.begin(), points_.end(), t,
                                       [](double x, const auto& p) { return x < p.first; });
            const auto& [t1, v1] = *it;
            const auto& [t0, v0] = *(it - 1);
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
    }
    throw std::logic_error("unreachable");
}

MeasureValue Gauge::apply(const MeasureValue& t) const {
    if (kind_ == Kind::identity && t.is_exact()) return t;
    // monotonicity turns the input interval into an output interval
    const double lo = (*this)(std::max(0.0, t.lo()));
    const double hi = (*this)(std::min(1.0, t.hi()));
    const double mid = 0.5 * (lo + hi);
    const double err = 0.5 * (hi - lo) + std::abs(hi) * 1e-15;
    return MeasureValue::certified(mid, err);
}

bool Gauge::subdivision_safe() const {
    switch (kind_) {
        case Kind::identity:
            return true;
        case Kind::power:
            return exponent_ <= 1.0;
        case Kind::exp_sqrt_log:
            return true;  // phi(t)/t = exp(eta sqrt(log 1/t)) decreases in t
        case Kind::table: {
            double prev_ratio = std::numeric_limits<double>::infinity();
            for (const auto& [t, v] : points_) {
                if (t <= 0.0) continue;
                const double ratio = v / t;
                if (ratio > prev_ratio * (1.0 + 1e-12)) return false;
                prev_ratio = ratio;
            }
            return true;
        }
    }
    return false;
}

std::string Gauge::describe() const {
    switch (kind_) {
        case Kind::identity:
            return "identity";
        case Kind::power:
            return "power(e=" + std::to_string(exponent_) + ",C=" + std::to_string(coeff_) + ")";
        case Kind::exp_sqrt_log:
            return "exp-sqrt-log(eta=" + std::to_string(eta_) + ",C=" + std::to_string(coeff_) +
                   ")";
        case Kind::table:
            return "table(" + std::to_string(points_.size()) + " points)";
    }
    return "?";
}

}  // namespace hotspot
