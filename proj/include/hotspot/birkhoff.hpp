#pragma once

#include <cstdint>
#include <vector>

#include "hotspot/measures.hpp"
#include "hotspot/rational.hpp"
#include "hotspot/streams.hpp"
#include "hotspot/word.hpp"

namespace hotspot {

/// Unnormalized orbit hit count S_N = #{0 <= i < N : T^i x in [xi]}.
/// `positions` is the number of orbit positions actually classified; it
/// falls short of the requested horizon only when a finite stream ran out,
/// in which case `exhausted` is set.
struct HitCount {
    std::uint64_t hits = 0;
    std::uint64_t positions = 0;
    bool exhausted = false;
};

HitCount hit_count(const DigitStream& x, const Word& xi, std::uint64_t horizon);

/// Frequency curve of one cylinder along one orbit.
struct FrequencyReport {
    Word cylinder;
    std::uint64_t horizon = 0;    // requested N (the last checkpoint)
    std::uint64_t positions = 0;  // classified positions
    std::uint64_t hits = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;  // (n, hits at n)
    double freq = 0.0;      // hits / positions
    double tail_max = 0.0;  // max of hits_n/n over the final tail fraction of checkpoints
    double tail_fraction = 0.5;
    MeasureValue mu;  // cylinder measure under the configured model
    bool exhausted = false;
};

FrequencyReport frequency_curve(const DigitStream& x, const Word& xi,
                                const std::vector<std::uint64_t>& checkpoints,
                                const MeasureModel& model, double tail_fraction = 0.5);

/// The sliding-window identity: averaging the window counts S_l over all
/// complete windows reproduces S_N up to boundary terms. Both sides are
/// exact rationals and the discrepancy carries the explicit bound 2(l-1):
/// only the 2(l-1) positions within l-1 of either end are covered by fewer
/// than l windows.
struct SlidingBlockCheck {
    Rational lhs;          // (1/l) * sum_{i=0}^{N-l} S_l(T^i x)
    Rational rhs;          // S_N(x)
    Rational discrepancy;  // |lhs - rhs|
    std::uint64_t bound = 0;
    bool bound_ok = false;
};

SlidingBlockCheck sliding_block_check(const DigitStream& x, const Word& xi, std::uint64_t window,
                                      std::uint64_t horizon);

/// The three-part classification of orbit positions behind the deviation
/// argument: `good` windows average within delta of mu, `escape` windows
/// touch the truncated-compact complement (some digit beyond the cutoff in
/// the inspected window), `deviating` windows stay inside but deviate.
struct DecompositionCounts {
    std::uint64_t window = 0;  // l
    Rational delta;
    Digit cutoff = 0;  // M
    std::uint64_t good = 0;
    std::uint64_t escape = 0;     // Q
    std::uint64_t deviating = 0;  // R
    std::uint64_t total = 0;      // N; good + escape + deviating == total
    std::uint64_t escape_positions = 0;  // #{i < N+l-1 : digit window of xi at i leaves the cutoff}
    std::uint64_t escape_bound = 0;      // l * escape_positions, the certified bound on Q
    bool bound_ok = false;
    bool exhausted = false;
};

DecompositionCounts decomposition_counts(const DigitStream& x, const Word& xi,
                                         std::uint64_t window, const Rational& delta, Digit cutoff,
                                         std::uint64_t horizon, const MeasureModel& model);

/// Empirical escape-mass diagnostics over a (cutoff, window) grid: entry
/// (M, w) is the sup over checkpoints n of the fraction of positions i < n
/// whose next w digits include one exceeding M. Rising toward 1 means the
/// orbit's empirical measures are not tight at that truncation.
struct EscapeReport {
    struct Entry {
        double sup_fraction = 0.0;
        std::uint64_t count = 0;  // escape count at the achieving checkpoint
        std::uint64_t at_n = 0;   // the achieving checkpoint (first one on ties)
        std::uint64_t positions = 0;
    };

    std::vector<Digit> cutoffs;
    std::vector<std::uint64_t> windows;
    std::vector<std::uint64_t> checkpoints;
    std::vector<std::vector<Entry>> entries;  // entries[cutoff_index][window_index]
    bool exhausted = false;

    const Entry& at(std::size_t cutoff_index, std::size_t window_index) const {
        return entries[cutoff_index][window_index];
    }
};

EscapeReport escape_report(const DigitStream& x, const std::vector<Digit>& cutoffs,
                           const std::vector<std::uint64_t>& windows,
                           const std::vector<std::uint64_t>& checkpoints);

}  // namespace hotspot
