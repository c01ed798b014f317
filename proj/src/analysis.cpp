#include "hotspot/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hotspot {

namespace {

/// Window hit count of xi inside a fully determining digit prefix.
std::uint64_t prefix_window_hits(const std::vector<Digit>& prefix, const Word& xi,
                                 std::uint64_t window) {
    if (xi.empty()) return window;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < window; ++i) {
        bool in = true;
        for (std::size_t j = 0; j < xi.size(); ++j) {
            if (prefix[i + j] != xi[j]) {
                in = false;
                break;
            }
        }
        if (in) ++hits;
    }
    return hits;
}

int compare_values(const MeasureValue& a, const MeasureValue& b) {
    if (a.is_exact() && b.is_exact()) {
        auto c = a.rational() <=> b.rational();
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    if (a.value() < b.value()) return -1;
    if (a.value() > b.value()) return 1;
    return 0;
}

/// Measure of the cylinder at the current trie path, extended digit by
/// digit: a Bernoulli product, or a Gauss interval from the convergents.
struct PathMeasure {
    const MeasureModel* model;
    MeasureValue mu;
    Convergents conv;

    static PathMeasure root(const MeasureModel& m) {
        PathMeasure out;
        out.model = &m;
        out.mu = MeasureValue::exact(Rational(1));
        out.conv = Convergents{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
        return out;
    }

    PathMeasure child(Digit d) const {
        PathMeasure out;
        out.model = model;
        if (model->is_bernoulli()) {
            out.mu = mu * model->vector().mass(d);
            out.conv = conv;
        } else {
            BigInt a(static_cast<std::int64_t>(d));
            out.conv.p_prev = conv.p;
            out.conv.q_prev = conv.q;
            out.conv.p = a * conv.p + conv.p_prev;
            out.conv.q = a * conv.q + conv.q_prev;
            out.mu = gauss_interval_measure(
                Rational(out.conv.p, out.conv.q),
                Rational(out.conv.p + out.conv.p_prev, out.conv.q + out.conv.q_prev));
        }
        return out;
    }
};

struct TrieNode {
    Digit digit = 0;
    bool member = false;
    bool take_self = false;  // DP choice: cover with this node's cylinder
    std::vector<std::uint32_t> children;
};

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 10; n < horizon; n *= 10) out.push_back(n);
    if (out.empty() || out.back() != horizon) out.push_back(horizon);
    return out;
}

const char* membership_caveat =
    "finite stream: tables computed on the available prefix";

}  // namespace

DeviationSet enumerate_deviation_set(const Word& xi, std::uint64_t window, const Rational& delta,
                                     const MeasureModel& model, Digit cutoff,
                                     std::uint64_t budget) {
    if (window < 1) throw std::invalid_argument("enumerate_deviation_set: window must be >= 1");
    if (cutoff < 1) throw std::invalid_argument("enumerate_deviation_set: cutoff must be >= 1");
    if (delta <= Rational(0)) {
        throw std::invalid_argument("enumerate_deviation_set: delta must be > 0");
    }

    DeviationSet out;
    out.cylinder = xi;
    out.window = window;
    out.delta = delta;
    out.cutoff = cutoff;
    // the empty word matches at every position, so no digits are inspected
    out.depth = xi.empty() ? 0 : window + xi.size() - 1;

    // enumeration size cutoff^depth against the budget
    std::uint64_t need = 1;
    for (std::size_t i = 0; i < out.depth; ++i) {
        if (need > budget / cutoff) {
            const std::uint64_t shown =
                need <= UINT64_MAX / cutoff ? need * cutoff : UINT64_MAX;
            throw BudgetExceeded(shown, budget);
        }
        need *= cutoff;
    }
    if (need > budget) throw BudgetExceeded(need, budget);

    const MeasureValue mu = model.cylinder_measure(xi);
    const bool exact = mu.is_exact();
    const Rational mu_rat = exact ? mu.rational() : Rational();
    const double mu_d = mu.value();
    const double delta_d = delta.to_double();

    std::vector<Cylinder> members;
    std::vector<Digit> word(out.depth, 1);
    while (true) {
        const std::uint64_t hits = prefix_window_hits(word, xi, window);
        bool deviates;
        if (exact) {
            Rational avg(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(window));
            deviates = (avg - mu_rat).abs() > delta;
        } else {
            double avg = static_cast<double>(hits) / static_cast<double>(window);
            deviates = std::abs(avg - mu_d) > delta_d;
        }
        if (deviates) members.emplace_back(Word(word));

        // odometer over digits 1..cutoff
        std::size_t pos = out.depth;
        while (pos > 0) {
            if (word[pos - 1] < cutoff) {
                ++word[pos - 1];
                break;
            }
            word[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
    }

    out.members = CylinderUnion::canonicalize(std::move(members));
    out.truncated = true;  // digits beyond the cutoff were excluded
    return out;
}

HMeasureResult h_phi_exact(const CylinderUnion& target, const MeasureModel& model,
                           const Gauge& gauge) {
    HMeasureResult out;
    out.exactness = gauge.subdivision_safe() ? Exactness::exact_over_cylinder_covers
                                             : Exactness::upper_bound;
    if (target.empty()) {
        out.value = MeasureValue::exact(Rational(0));
        return out;
    }

    // prefix trie of the member words; members are its leaves
    std::vector<TrieNode> nodes(1);
    for (const auto& member : target.members()) {
        std::uint32_t cur = 0;
        for (Digit d : member.word.digits()) {
            std::uint32_t next = 0;
            for (std::uint32_t c : nodes[cur].children) {
                if (nodes[c].digit == d) {
                    next = c;
                    break;
                }
            }
            if (next == 0) {
                next = static_cast<std::uint32_t>(nodes.size());
                nodes.push_back(TrieNode{d, false, false, {}});
                nodes[cur].children.push_back(next);
            }
            cur = next;
        }
        nodes[cur].member = true;
    }

    // bottom-up cover cost; ties resolve to the parent (shallower cover)
    auto solve = [&](auto&& self, std::uint32_t idx, const PathMeasure& pm) -> MeasureValue {
        TrieNode& node = nodes[idx];
        const MeasureValue own = gauge.apply(pm.mu);
        if (node.member) {
            node.take_self = true;
            return own;
        }
        MeasureValue children_sum = MeasureValue::exact(Rational(0));
        for (std::uint32_t c : node.children) {
            children_sum = children_sum + self(self, c, pm.child(nodes[c].digit));
        }
        if (compare_values(own, children_sum) <= 0) {
            node.take_self = true;
            return own;
        }
        node.take_self = false;
        return children_sum;
    };
    out.value = solve(solve, 0, PathMeasure::root(model));

    // collect the chosen antichain
    std::vector<Cylinder> cover;
    std::vector<Digit> path;
    auto collect = [&](auto&& self, std::uint32_t idx) -> void {
        const TrieNode& node = nodes[idx];
        if (node.take_self) {
            cover.emplace_back(Word(path));
            return;
        }
        for (std::uint32_t c : node.children) {
            path.push_back(nodes[c].digit);
            self(self, c);
            path.pop_back();
        }
    };
    collect(collect, 0);
    out.optimal_cover = CylinderUnion::canonicalize(std::move(cover));
    return out;
}

DecayScan h_phi_decay_scan(const Word& xi, const Rational& delta, const MeasureModel& model,
                           const Gauge& gauge, const std::vector<std::uint64_t>& windows,
                           Digit cutoff, std::uint64_t budget) {
    DecayScan out;
    std::optional<MeasureValue> prev;
    bool strict = true;
    bool weak = true;
    for (std::uint64_t ell : windows) {
        DeviationSet dev = enumerate_deviation_set(xi, ell, delta, model, cutoff, budget);
        HMeasureResult h = h_phi_exact(dev.members, model, gauge);
        out.rows.push_back({ell, dev.members.size(), h.value});
        if (prev) {
            int c = compare_values(h.value, *prev);
            if (c >= 0) strict = false;
            if (c > 0) weak = false;
        }
        prev = h.value;
    }
    if (out.rows.size() < 2) {
        out.trend = DecayScan::Trend::empty;
    } else if (strict) {
        out.trend = DecayScan::Trend::strictly_decreasing;
    } else if (weak) {
        out.trend = DecayScan::Trend::nonincreasing;
    } else {
        out.trend = DecayScan::Trend::mixed;
    }
    return out;
}

namespace {

void enumerate_words(std::size_t max_depth, Digit max_digit, std::vector<Word>& out) {
    std::vector<Digit> word;
    auto rec = [&](auto&& self) -> void {
        if (!word.empty()) out.emplace_back(word);
        if (word.size() == max_depth) return;
        for (Digit d = 1; d <= max_digit; ++d) {
            word.push_back(d);
            self(self);
            word.pop_back();
        }
    };
    rec(rec);
}

}  // namespace

TheoremVerdict theorem_verdict(TheoremKind kind, const DigitStream& stream,
                               const MeasureModel& model, const Gauge& gauge,
                               const VerdictParams& params) {
    if (kind == TheoremKind::t2 && !model.is_gauss()) {
        throw std::invalid_argument("theorem_verdict: T2 requires the gauss model");
    }
    if (kind == TheoremKind::t3 && !model.is_bernoulli()) {
        throw std::invalid_argument("theorem_verdict: T3 requires a bernoulli model");
    }

    TheoremVerdict out;
    out.kind = kind;

    std::vector<std::uint64_t> checkpoints =
        params.checkpoints.empty() ? default_checkpoints(params.horizon) : params.checkpoints;

    std::vector<Word> cylinders;
    {
        // depth guard: sum of cutoff^k for k <= depth must stay in budget
        std::uint64_t count = 0, level = 1;
        for (std::size_t k = 1; k <= params.depth_cutoff; ++k) {
            if (level > params.budget / params.digit_cutoff) {
                throw BudgetExceeded(params.budget + 1, params.budget);
            }
            level *= params.digit_cutoff;
            count += level;
            if (count > params.budget) throw BudgetExceeded(count, params.budget);
        }
        enumerate_words(params.depth_cutoff, params.digit_cutoff, cylinders);
    }

    bool any_exhausted = false;
    out.hypothesis_all_pass = true;
    out.conclusion_all_pass = true;
    for (const Word& xi : cylinders) {
        FrequencyReport fr =
            frequency_curve(stream, xi, checkpoints, model, params.tail_fraction);
        any_exhausted = any_exhausted || fr.exhausted;

        TheoremVerdict::HypothesisRow hyp;
        hyp.cylinder = xi;
        hyp.tail_max = fr.tail_max;
        hyp.mu = fr.mu.value();
        hyp.gauge_bound = gauge.apply(fr.mu).value();
        hyp.pass = hyp.tail_max <= hyp.gauge_bound;
        out.hypothesis_all_pass = out.hypothesis_all_pass && hyp.pass;
        out.hypothesis.push_back(std::move(hyp));

        TheoremVerdict::ConclusionRow con;
        con.cylinder = xi;
        con.freq = fr.freq;
        con.mu = fr.mu.value();
        con.deviation = std::abs(con.freq - con.mu);
        const double n = fr.positions > 0 ? static_cast<double>(fr.positions) : 1.0;
        con.tolerance = std::max(params.fixed_tolerance,
                                 params.sigma_factor *
                                     std::sqrt(std::max(0.0, con.mu * (1.0 - con.mu)) / n));
        con.pass = con.deviation <= con.tolerance;
        out.conclusion_all_pass = out.conclusion_all_pass && con.pass;
        out.conclusion.push_back(std::move(con));
    }

    // asymptotic-envelope diagnostics on the sampled eta grid
    if (kind != TheoremKind::t1) {
        for (double eta : params.etas) {
            TheoremVerdict::EnvelopeRow row;
            row.eta = eta;
            for (const auto& hyp : out.hypothesis) {
                const double t = hyp.mu;
                if (!(t > 0.0) || t >= 1.0) continue;
                double envelope;
                double numer;
                if (kind == TheoremKind::t2) {
                    // psi(t) = gauge(t)/t against exp(eta sqrt(log 1/t))
                    numer = gauge(t) / t;
                    envelope = std::exp(eta * std::sqrt(std::log(1.0 / t)));
                } else {
                    numer = gauge(t);
                    envelope = std::pow(t, 1.0 - eta);
                }
                row.sup_ratio = std::max(row.sup_ratio, numer / envelope);
            }
            out.envelope.push_back(row);
        }
    }

    if (kind == TheoremKind::t3) {
        for (double eta : params.etas) {
            TailSeries ts = model.vector().tail_series(eta);
            out.tail_condition.push_back({eta, ts.converges, ts.value_or_bound});
            out.tail_condition_met = out.tail_condition_met || ts.converges;
        }
        if (!out.tail_condition_met) {
            out.caveats.push_back(
                "tail series diverges for every sampled eta0; T3 hypotheses not established");
        }
    }

    if (kind == TheoremKind::t1 && !params.ells.empty()) {
        out.decay_all_trending = true;
        for (const Word& xi : cylinders) {
            for (const Rational& delta : params.deltas) {
                TheoremVerdict::DecayRow row;
                row.cylinder = xi;
                row.delta = delta;
                row.scan = h_phi_decay_scan(xi, delta, model, gauge, params.ells,
                                            params.digit_cutoff, params.budget);
                const auto trend = row.scan.trend;
                if (trend == DecayScan::Trend::mixed) out.decay_all_trending = false;
                out.hmeasure_decay.push_back(std::move(row));
            }
        }
    }

    out.tightness = escape_report(stream, {params.digit_cutoff}, params.windows, checkpoints);
    any_exhausted = any_exhausted || out.tightness.exhausted;
    for (std::size_t wi = 0; wi < params.windows.size(); ++wi) {
        out.tightness_sup = std::max(out.tightness_sup, out.tightness.at(0, wi).sup_fraction);
    }

    out.caveats.push_back("finite horizon N=" + std::to_string(params.horizon) +
                          "; limsup proxied by the max over the final " +
                          std::to_string(params.tail_fraction) + " fraction of checkpoints");
    out.caveats.push_back("compact sets realized as digit-window truncations (cutoff M=" +
                          std::to_string(params.digit_cutoff) + ")");
    if (!params.etas.empty()) {
        out.caveats.push_back("universal quantifiers over eta sampled on a finite grid of " +
                              std::to_string(params.etas.size()) + " values");
    }
    if (any_exhausted) out.caveats.push_back(membership_caveat);
    return out;
}

CounterexampleReport counterexample_report(const MeasureModel& model, std::size_t depth_cutoff,
                                           Digit digit_cutoff, std::uint64_t horizon) {
    if (!model.is_bernoulli()) {
        throw std::invalid_argument("counterexample_report: requires a bernoulli model");
    }
    if (digit_cutoff < 1 || horizon < 1) {
        throw std::invalid_argument("counterexample_report: cutoff and horizon must be >= 1");
    }

    CounterexampleReport out;
    out.horizon = horizon;
    DigitStream ramp{StreamSpec{StreamSpec::Ramp{}}};

    std::vector<Word> cylinders;
    enumerate_words(depth_cutoff, digit_cutoff, cylinders);
    for (const Word& xi : cylinders) {
        HitCount hc = hit_count(ramp, xi, horizon);
        CounterexampleReport::CylinderRow row;
        row.cylinder = xi;
        row.hits = hc.hits;
        row.freq = static_cast<double>(hc.hits) / static_cast<double>(horizon);
        row.mu = model.cylinder_measure(xi).value();
        out.max_hits = std::max(out.max_hits, hc.hits);
        out.cylinders.push_back(std::move(row));
    }

    // any probability vector on the digits gives some digit positive mass
    for (Digit a = 1;; ++a) {
        MeasureValue m = model.vector().mass(a);
        if (m.value() > 0.0) {
            out.witness_digit = a;
            out.witness_mass = m.value();
            break;
        }
    }

    std::vector<Digit> cutoffs;
    for (Digit m = 1; m <= digit_cutoff; ++m) cutoffs.push_back(m);
    out.escape = escape_report(ramp, cutoffs, {1}, {horizon});

    out.caveats.push_back("escape fractions reported at the digit-window truncation, not a "
                          "genuine compact");
    return out;
}

}  // namespace hotspot
