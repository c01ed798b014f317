#include "hotspot/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace hotspot {

HitCount hit_count(const DigitStream& x, const Word& xi, std::uint64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("hit_count: horizon must be >= 1");
    HitCount out;
    for (std::uint64_t i = 0; i < horizon; ++i) {
        Membership m = member_at(x, xi, i);
        if (m == Membership::exhausted) {
            out.exhausted = true;
            return out;
        }
        if (m == Membership::in) ++out.hits;
        ++out.positions;
    }
    return out;
}

FrequencyReport frequency_curve(const DigitStream& x, const Word& xi,
                                const std::vector<std::uint64_t>& checkpoints,
                                const MeasureModel& model, double tail_fraction) {
    if (checkpoints.empty()) throw std::invalid_argument("frequency_curve: no checkpoints");
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
        if (checkpoints[k] < 1 || (k > 0 && checkpoints[k] <= checkpoints[k - 1])) {
            throw std::invalid_argument("frequency_curve: checkpoints must be strictly increasing");
        }
    }
    if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
        throw std::invalid_argument("frequency_curve: tail fraction must be in (0,1]");
    }

    FrequencyReport out;
    out.cylinder = xi;
    out.horizon = checkpoints.back();
    out.tail_fraction = tail_fraction;
    out.mu = model.cylinder_measure(xi);

    std::size_t next = 0;
    for (std::uint64_t i = 0; i < out.horizon; ++i) {
        Membership m = member_at(x, xi, i);
        if (m == Membership::exhausted) {
            out.exhausted = true;
            break;
        }
        if (m == Membership::in) ++out.hits;
        ++out.positions;
        if (next < checkpoints.size() && out.positions == checkpoints[next]) {
            out.checkpoints.emplace_back(out.positions, out.hits);
            ++next;
        }
    }
    out.freq = out.positions ? static_cast<double>(out.hits) / static_cast<double>(out.positions)
                             : 0.0;

    const std::size_t recorded = out.checkpoints.size();
    if (recorded > 0) {
        const auto tail_count = static_cast<std::size_t>(
            std::min<double>(static_cast<double>(recorded),
                             std::ceil(static_cast<double>(recorded) * tail_fraction)));
        for (std::size_t k = recorded - tail_count; k < recorded; ++k) {
            const auto& [n, h] = out.checkpoints[k];
            out.tail_max = std::max(out.tail_max,
                                    static_cast<double>(h) / static_cast<double>(n));
        }
    }
    return out;
}

SlidingBlockCheck sliding_block_check(const DigitStream& x, const Word& xi, std::uint64_t window,
                                      std::uint64_t horizon) {
    if (window < 1) throw std::invalid_argument("sliding_block_check: window must be >= 1");
    if (horizon < window) {
        throw std::invalid_argument("sliding_block_check: horizon must be >= window");
    }

    // w_k = number of complete windows [i, i+window) containing position k
    std::uint64_t total_weighted = 0;  // sum over complete windows of S_window
    std::uint64_t direct = 0;          // S_horizon
    const std::uint64_t last_start = horizon - window;
    for (std::uint64_t k = 0; k < horizon; ++k) {
        Membership m = member_at(x, xi, k);
        if (m == Membership::exhausted) {
            throw std::invalid_argument("sliding_block_check: stream shorter than horizon");
        }
        if (m != Membership::in) continue;
        ++direct;
        const std::uint64_t lo = k >= window - 1 ? k - (window - 1) : 0;
        const std::uint64_t hi = std::min(last_start, k);
        total_weighted += hi - lo + 1;
    }

    SlidingBlockCheck out;
    out.lhs = Rational(static_cast<std::int64_t>(total_weighted),
                       static_cast<std::int64_t>(window));
    out.rhs = Rational(static_cast<std::int64_t>(direct));
    out.discrepancy = (out.lhs - out.rhs).abs();
    out.bound = 2 * (window - 1);
    out.bound_ok = out.discrepancy <= Rational(static_cast<std::int64_t>(out.bound));
    return out;
}

DecompositionCounts decomposition_counts(const DigitStream& x, const Word& xi,
                                         std::uint64_t window, const Rational& delta, Digit cutoff,
                                         std::uint64_t horizon, const MeasureModel& model) {
    if (window < 1) throw std::invalid_argument("decomposition_counts: window must be >= 1");
    if (cutoff < 1) throw std::invalid_argument("decomposition_counts: cutoff must be >= 1");
    if (horizon < 1) throw std::invalid_argument("decomposition_counts: horizon must be >= 1");

    DecompositionCounts out;
    out.window = window;
    out.delta = delta;
    out.cutoff = cutoff;

    const MeasureValue mu = model.cylinder_measure(xi);
    const bool exact = mu.is_exact();
    const Rational mu_rat = exact ? mu.rational() : Rational();
    const double mu_d = mu.value();
    const double delta_d = delta.to_double();

    // rolling count of hits over the window [i, i+window)
    std::uint64_t window_hits = 0;
    auto push_position = [&](std::uint64_t pos) -> bool {
        Membership m = member_at(x, xi, pos);
        if (m == Membership::exhausted) return false;
        if (m == Membership::in) ++window_hits;
        return true;
    };

    for (std::uint64_t pos = 0; pos < window; ++pos) {
        if (!push_position(pos)) {
            out.exhausted = true;
            return out;  // not even one full window of data
        }
    }

    const std::size_t span = window + xi.size() - 1;  // digits inspected from position i
    for (std::uint64_t i = 0; i < horizon; ++i) {
        // deviation of the window average from mu
        bool good;
        if (exact) {
            Rational avg(static_cast<std::int64_t>(window_hits),
                         static_cast<std::int64_t>(window));
            good = (avg - mu_rat).abs() < delta;
        } else {
            double avg = static_cast<double>(window_hits) / static_cast<double>(window);
            good = std::abs(avg - mu_d) < delta_d;
        }
        if (good) {
            ++out.good;
        } else {
            bool escapes = false;
            for (std::size_t j = 0; j < span; ++j) {
                auto d = x.digit(i + j + 1);
                if (d && *d > cutoff) {
                    escapes = true;
                    break;
                }
            }
            if (escapes) {
                ++out.escape;
            } else {
                ++out.deviating;
            }
        }
        ++out.total;
        if (i + 1 < horizon) {
            if (!push_position(i + window)) {
                out.exhausted = true;
                break;
            }
            Membership drop = member_at(x, xi, i);
            if (drop == Membership::in) --window_hits;
        }
    }

    // certified bound on the escape count: each escaping window contains a
    // position k < N+l-1 whose xi-length digit window leaves the cutoff
    const std::uint64_t k_end = out.total + window - 1;
    for (std::uint64_t k = 0; k < k_end; ++k) {
        bool esc = false;
        for (std::size_t j = 0; j < std::max<std::size_t>(xi.size(), 1); ++j) {
            auto d = x.digit(k + j + 1);
            if (!d) break;
            if (*d > cutoff) {
                esc = true;
                break;
            }
        }
        if (esc) ++out.escape_positions;
    }
    out.escape_bound = window * out.escape_positions;
    out.bound_ok = out.escape <= out.escape_bound;
    return out;
}

EscapeReport escape_report(const DigitStream& x, const std::vector<Digit>& cutoffs,
                           const std::vector<std::uint64_t>& windows,
                           const std::vector<std::uint64_t>& checkpoints) {
    if (cutoffs.empty() || windows.empty() || checkpoints.empty()) {
        throw std::invalid_argument("escape_report: empty grid");
    }
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
        if (checkpoints[k] < 1 || (k > 0 && checkpoints[k] <= checkpoints[k - 1])) {
            throw std::invalid_argument("escape_report: checkpoints must be strictly increasing");
        }
    }
    for (std::uint64_t w : windows) {
        if (w < 1) throw std::invalid_argument("escape_report: window must be >= 1");
    }

    EscapeReport out;
    out.cutoffs = cutoffs;
    out.windows = windows;
    out.checkpoints = checkpoints;
    out.entries.assign(cutoffs.size(), std::vector<EscapeReport::Entry>(windows.size()));

    const std::uint64_t horizon = checkpoints.back();
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
        const std::uint64_t w = windows[wi];
        // monotone deque of (position, digit), digits decreasing
        std::deque<std::pair<std::uint64_t, Digit>> maxq;
        std::vector<std::uint64_t> counts(cutoffs.size(), 0);
        std::uint64_t positions = 0;
        std::size_t next = 0;

        auto feed = [&](std::uint64_t pos) -> bool {  // pos is 1-based digit index
            auto d = x.digit(pos);
            if (!d) return false;
            while (!maxq.empty() && maxq.back().second <= *d) maxq.pop_back();
            maxq.emplace_back(pos, *d);
            return true;
        };

        bool ran_out = false;
        for (std::uint64_t pos = 1; pos <= w; ++pos) {
            if (!feed(pos)) {
                ran_out = true;
                break;
            }
        }
        if (!ran_out) {
            for (std::uint64_t i = 0; i < horizon; ++i) {
                while (!maxq.empty() && maxq.front().first <= i) maxq.pop_front();
                const Digit wmax = maxq.front().second;
                for (std::size_t mi = 0; mi < cutoffs.size(); ++mi) {
                    if (wmax > cutoffs[mi]) ++counts[mi];
                }
                ++positions;
                if (next < checkpoints.size() && positions == checkpoints[next]) {
                    for (std::size_t mi = 0; mi < cutoffs.size(); ++mi) {
                        const double frac = static_cast<double>(counts[mi]) /
                                            static_cast<double>(positions);
                        auto& entry = out.entries[mi][wi];
                        if (frac > entry.sup_fraction) {
                            entry.sup_fraction = frac;
                            entry.count = counts[mi];
                            entry.at_n = positions;
                        }
                    }
                    ++next;
                }
                if (i + 1 < horizon && !feed(i + 1 + w)) {
                    ran_out = true;
                    break;
                }
            }
        }
        if (positions < horizon) out.exhausted = true;
        for (std::size_t mi = 0; mi < cutoffs.size(); ++mi) {
            out.entries[mi][wi].positions = positions;
        }
    }
    return out;
}

}  // namespace hotspot
