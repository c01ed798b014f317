#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hotspot/birkhoff.hpp"
#include "hotspot/cylinder.hpp"
#include "hotspot/errors.hpp"
#include "hotspot/gauge.hpp"
#include "hotspot/measures.hpp"
#include "hotspot/rational.hpp"
#include "hotspot/streams.hpp"
#include "hotspot/word.hpp"

namespace hotspot {

constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// The deviation set A_l(chi_xi, delta) restricted to digits <= cutoff:
/// all depth-d cylinders (d = l + |xi| - 1) over the truncated alphabet
/// whose l-window average of xi-hits deviates from mu[xi] by more than
/// delta. The window count is fully determined by the depth-d prefix.
/// `truncated` records that cylinders containing a digit beyond the cutoff
/// were excluded, mirroring intersection with the truncated compact.
struct DeviationSet {
    Word cylinder;
    std::uint64_t window = 0;  // l
    Rational delta;
    Digit cutoff = 0;       // M
    std::size_t depth = 0;  // l + |xi| - 1
    CylinderUnion members;
    bool truncated = true;
};

DeviationSet enumerate_deviation_set(const Word& xi, std::uint64_t window, const Rational& delta,
                                     const MeasureModel& model, Digit cutoff,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Result of the gauge Hausdorff cover optimization.
///
/// `exact_over_cylinder_covers` asserts the value is the true infimum over
/// all covers of the target by cylinders: with a subdivision-safe gauge,
/// replacing any cover element by deeper cylinders never lowers the cost,
/// so minimizing over antichains in the target's prefix tree is exact.
/// For gauges without that property the tree optimum is an upper bound.
enum class Exactness { exact_over_cylinder_covers, upper_bound };

struct HMeasureResult {
    MeasureValue value;
    CylinderUnion optimal_cover;
    Exactness exactness = Exactness::exact_over_cylinder_covers;
};

/// Exact infimum of sum phi(mu(C_i)) over cylinder covers of the target,
/// by dynamic programming over the laminar prefix tree:
///   cost(v) = min(phi(mu[v]), sum of cost over children meeting the target),
/// leaves being the target members themselves. Ties go to the parent, so
/// the reported optimal cover is the shallowest optimum.
HMeasureResult h_phi_exact(const CylinderUnion& target, const MeasureModel& model,
                           const Gauge& gauge);

/// H_phi of the truncated deviation sets across a window list.
struct DecayScan {
    struct Row {
        std::uint64_t window = 0;
        std::size_t member_count = 0;
        MeasureValue value;
    };
    std::vector<Row> rows;
    enum class Trend { strictly_decreasing, nonincreasing, mixed, empty };
    Trend trend = Trend::empty;
};

DecayScan h_phi_decay_scan(const Word& xi, const Rational& delta, const MeasureModel& model,
                           const Gauge& gauge, const std::vector<std::uint64_t>& windows,
                           Digit cutoff, std::uint64_t budget = kDefaultEnumerationBudget);

/// Which criterion preset a verdict run instantiates:
///   T1  general shift system, gauge bound phi(mu)
///   T2  continued-fraction system with the Gauss measure, bound mu*psi(mu)
///   T3  Bernoulli shift with a tail-series condition, bound phi(mu)
enum class TheoremKind { t1, t2, t3 };

struct VerdictParams {
    std::size_t depth_cutoff = 2;        // enumerate cylinders up to this depth
    Digit digit_cutoff = 4;              // and digits up to this value (also the escape M grid seed)
    std::vector<std::uint64_t> windows = {1};  // escape windows w
    std::uint64_t horizon = 100000;      // N
    std::vector<std::uint64_t> checkpoints;    // defaults to a geometric ladder up to N
    std::vector<Rational> deltas;        // deviation tolerances (T1 decay scans)
    std::vector<std::uint64_t> ells;     // window lengths for decay scans
    std::vector<double> etas;            // envelope / tail-series exponents to sample
    double tail_fraction = 0.5;
    std::uint64_t budget = kDefaultEnumerationBudget;
    /// Conclusion tolerance: |freq - mu| <= max(fixed_tolerance,
    /// sigma_factor * sqrt(mu(1-mu)/N)).
    double sigma_factor = 4.0;
    double fixed_tolerance = 0.0;
};

/// Finite-scale evidence tables for one theorem's hypotheses and conclusion.
/// Verdicts never claim limits; every row carries the scale it was computed
/// at, and `caveats` lists the truncations involved.
struct TheoremVerdict {
    TheoremKind kind = TheoremKind::t1;

    struct HypothesisRow {
        Word cylinder;
        double tail_max = 0.0;     // finite-N limsup proxy of S_N/N
        double gauge_bound = 0.0;  // phi(mu) resp. mu*psi(mu)
        double mu = 0.0;
        bool pass = false;  // tail_max <= gauge_bound
    };
    std::vector<HypothesisRow> hypothesis;
    bool hypothesis_all_pass = false;

    struct EnvelopeRow {  // per eta: sup over cylinders of psi(mu)/envelope(mu)
        double eta = 0.0;
        double sup_ratio = 0.0;
    };
    std::vector<EnvelopeRow> envelope;  // T2/T3 asymptotic-form diagnostics

    struct TailSeriesRow {
        double eta0 = 0.0;
        bool converges = false;
        double value_or_bound = 0.0;
    };
    std::vector<TailSeriesRow> tail_condition;  // T3 only
    bool tail_condition_met = false;            // some sampled eta0 converges

    struct DecayRow {
        Word cylinder;
        Rational delta;
        DecayScan scan;
    };
    std::vector<DecayRow> hmeasure_decay;  // T1 only
    bool decay_all_trending = false;       // every scan nonincreasing

    EscapeReport tightness;
    double tightness_sup = 0.0;  // largest grid entry at the largest cutoff

    struct ConclusionRow {
        Word cylinder;
        double freq = 0.0;
        double mu = 0.0;
        double deviation = 0.0;
        double tolerance = 0.0;
        bool pass = false;
    };
    std::vector<ConclusionRow> conclusion;
    bool conclusion_all_pass = false;

    std::vector<std::string> caveats;
};

TheoremVerdict theorem_verdict(TheoremKind kind, const DigitStream& stream,
                               const MeasureModel& model, const Gauge& gauge,
                               const VerdictParams& params);

/// The escape-to-infinity orbit: frequency of every truncated cylinder
/// along the ramp stream collapses while any Bernoulli measure keeps a
/// digit of positive mass, and the escape fraction approaches 1.
struct CounterexampleReport {
    struct CylinderRow {
        Word cylinder;
        std::uint64_t hits = 0;
        double freq = 0.0;
        double mu = 0.0;
    };
    std::vector<CylinderRow> cylinders;
    std::uint64_t max_hits = 0;  // over all rows

    Digit witness_digit = 0;  // smallest digit with positive mass
    double witness_mass = 0.0;

    EscapeReport escape;
    std::uint64_t horizon = 0;
    std::vector<std::string> caveats;
};

CounterexampleReport counterexample_report(const MeasureModel& model, std::size_t depth_cutoff,
                                           Digit digit_cutoff, std::uint64_t horizon);

}  // namespace hotspot
