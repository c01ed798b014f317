// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with its runtime. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hotspot/analysis.hpp"
#include "hotspot/rng.hpp"
#include "support/oracles.hpp"

using namespace hotspot;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double time_limit_s;
    bool (*run)(std::string& detail);
};

MeasureModel geometric_model() {
    return MeasureModel::bernoulli(ProbabilityVector::geometric(Rational(1, 2)));
}

bool check(bool ok, std::string& detail, const std::string& message) {
    if (!ok && detail.empty()) detail = message;
    return ok;
}

// 1. The escape-to-infinity orbit: every truncated cylinder is hit at most
//    once, the measure keeps a positive-mass digit, and the escape fraction
//    is exactly 1 - M/N. Exact equalities.
bool criterion_counterexample(std::string& detail) {
    const std::uint64_t horizon = 100000;
    auto report = counterexample_report(geometric_model(), 3, 10, horizon);
    bool ok = true;
    ok &= check(report.cylinders.size() == 10 + 100 + 1000, detail, "cylinder enumeration size");
    for (const auto& row : report.cylinders) {
        ok &= check(row.hits <= 1, detail, "hits > 1 at " + row.cylinder.str());
        ok &= check(row.freq <= 1e-5, detail, "freq > 1e-5 at " + row.cylinder.str());
    }
    ok &= check(report.witness_digit == 1, detail, "witness digit");
    auto mu1 = geometric_model().cylinder_measure(Word({1}));
    ok &= check(mu1.rational() == Rational(1, 2), detail, "mu[1] != 1/2");
    for (std::size_t mi = 0; mi < report.escape.cutoffs.size(); ++mi) {
        const Digit m = report.escape.cutoffs[mi];
        const auto& entry = report.escape.at(mi, 0);
        ok &= check(entry.count == horizon - m, detail,
                    "escape count at M=" + std::to_string(m));
        ok &= check(entry.at_n == horizon, detail, "escape checkpoint");
    }
    return ok;
}

// 2. A sampled i.i.d. orbit satisfies the normality conclusion within
//    binomial 4-sigma tolerance, and its escape mass stays near the tail
//    probability of the truncation.
bool criterion_iid_positive(std::string& detail) {
    const std::uint64_t horizon = 1000000;
    DigitStream stream{
        StreamSpec{StreamSpec::Iid{ProbabilityVector::geometric(Rational(1, 2)), 42}}};
    auto model = geometric_model();
    bool ok = true;

    std::vector<Word> words;
    for (Digit a = 1; a <= 4; ++a) {
        words.push_back(Word({a}));
        for (Digit b = 1; b <= 4; ++b) words.push_back(Word({a, b}));
    }
    for (const Word& xi : words) {
        auto fr = frequency_curve(stream, xi, {horizon}, model);
        const double mu = fr.mu.value();
        const double tol = 4.0 * std::sqrt(mu * (1.0 - mu) / static_cast<double>(horizon));
        ok &= check(std::abs(fr.freq - mu) <= tol, detail,
                    "freq deviates at " + xi.str() + ": |" + std::to_string(fr.freq) + " - " +
                        std::to_string(mu) + "| > " + std::to_string(tol));
    }

    auto escape = escape_report(stream, {8}, {1}, {horizon});
    const double p = std::ldexp(1.0, -8);
    const double bound = p + 4.0 * std::sqrt(p / static_cast<double>(horizon));
    ok &= check(escape.at(0, 0).sup_fraction <= bound, detail,
                "escape fraction " + std::to_string(escape.at(0, 0).sup_fraction) +
                    " above " + std::to_string(bound));
    return ok;
}

// 3. The laminar-cover dynamic program equals exhaustive antichain-cover
//    minimization on 200 seeded targets: exactly for the identity gauge,
//    within 1e-12 interval comparison otherwise.
bool criterion_cover_oracle(std::string& detail) {
    SplitRng rng(0xacce97);
    auto model = geometric_model();
    const std::vector<Gauge> gauges{Gauge::identity(), Gauge::power(0.9), Gauge::power(0.5),
                                    Gauge::exp_sqrt_log(1.0)};
    bool ok = true;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Cylinder> members;
        const std::size_t n = rng.next_range(0, 6);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Digit> digits;
            const std::size_t depth = rng.next_range(1, 3);
            for (std::size_t j = 0; j < depth; ++j) digits.push_back(rng.next_range(1, 3));
            members.emplace_back(Word(std::move(digits)));
        }
        auto target = CylinderUnion::canonicalize(std::move(members));
        const Gauge& gauge = gauges[iter % gauges.size()];
        auto got = h_phi_exact(target, model, gauge);
        if (gauge.is_identity()) {
            ok &= check(got.value.rational() == testing::min_cover_cost_exact(target, model),
                        detail, "identity-gauge mismatch at seed case " + std::to_string(iter));
        } else {
            const double oracle = testing::min_cover_cost(target, model, gauge);
            ok &= check(std::abs(got.value.value() - oracle) <= 1e-12, detail,
                        "cover cost mismatch at seed case " + std::to_string(iter));
        }
    }
    return ok;
}

// 4. The deviation set of [1] at window 2 over digits <= 3: exactly five
//    members at delta = 2/5 and none at delta = 3/5.
bool criterion_deviation_oracle(std::string& detail) {
    auto dev = enumerate_deviation_set(Word({1}), 2, Rational(2, 5), geometric_model(), 3);
    const std::vector<Word> expected{Word({1, 1}), Word({2, 2}), Word({2, 3}), Word({3, 2}),
                                     Word({3, 3})};
    bool ok = check(dev.members.size() == expected.size(), detail, "member count");
    if (ok) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            ok &= check(dev.members.members()[i].word == expected[i], detail,
                        "member " + std::to_string(i));
        }
    }
    auto none = enumerate_deviation_set(Word({1}), 2, Rational(3, 5), geometric_model(), 3);
    ok &= check(none.members.empty(), detail, "delta=3/5 set not empty");
    return ok;
}

// 5. Sliding-window identity: |lhs - rhs| <= 2(l-1) in exact rationals over
//    200 seeded stream/pattern/window configurations.
bool criterion_sliding_window(std::string& detail) {
    SplitRng rng(0x511de);
    bool ok = true;
    for (int iter = 0; iter < 200; ++iter) {
        DigitStream stream = [&]() -> DigitStream {
            switch (rng.next_range(0, 2)) {
                case 0:
                    return DigitStream{StreamSpec{StreamSpec::Ramp{}}};
                case 1: {
                    std::vector<Digit> period;
                    const std::size_t len = rng.next_range(1, 5);
                    for (std::size_t i = 0; i < len; ++i) period.push_back(rng.next_range(1, 6));
                    return DigitStream{StreamSpec{StreamSpec::Periodic{Word(std::move(period))}}};
                }
                default:
                    return DigitStream{StreamSpec{StreamSpec::Iid{
                        ProbabilityVector::geometric(Rational(1, 2)), rng.next_u64()}}};
            }
        }();
        std::vector<Digit> pattern;
        const std::size_t len = rng.next_range(1, 3);
        for (std::size_t i = 0; i < len; ++i) pattern.push_back(rng.next_range(1, 4));
        const std::uint64_t window = rng.next_range(1, 64);
        const std::uint64_t horizon = rng.next_range(window, 10000);
        auto result = sliding_block_check(stream, Word(std::move(pattern)), window, horizon);
        ok &= check(result.bound_ok, detail, "bound violated at seed case " + std::to_string(iter));
    }
    return ok;
}

// 6. Decomposition accounting: good + Q + R = N and Q <= l * (window escape
//    positions) over the same kind of 200 seeded configurations.
bool criterion_decomposition(std::string& detail) {
    SplitRng rng(0xdec0de);
    bool ok = true;
    for (int iter = 0; iter < 200; ++iter) {
        DigitStream stream = [&]() -> DigitStream {
            switch (rng.next_range(0, 2)) {
                case 0:
                    return DigitStream{StreamSpec{StreamSpec::Ramp{}}};
                case 1: {
                    std::vector<Digit> period;
                    const std::size_t len = rng.next_range(1, 5);
                    for (std::size_t i = 0; i < len; ++i) period.push_back(rng.next_range(1, 6));
                    return DigitStream{StreamSpec{StreamSpec::Periodic{Word(std::move(period))}}};
                }
                default:
                    return DigitStream{StreamSpec{StreamSpec::Iid{
                        ProbabilityVector::geometric(Rational(1, 2)), rng.next_u64()}}};
            }
        }();
        std::vector<Digit> pattern;
        const std::size_t len = rng.next_range(1, 3);
        for (std::size_t i = 0; i < len; ++i) pattern.push_back(rng.next_range(1, 4));
        const std::uint64_t window = rng.next_range(1, 32);
        const std::uint64_t horizon = rng.next_range(window, 5000);
        const Digit cutoff = rng.next_range(1, 12);
        const Rational delta(static_cast<std::int64_t>(rng.next_range(1, 9)), 10);
        auto counts = decomposition_counts(stream, Word(std::move(pattern)), window, delta,
                                           cutoff, horizon, geometric_model());
        ok &= check(counts.good + counts.escape + counts.deviating == counts.total, detail,
                    "partition broken at seed case " + std::to_string(iter));
        ok &= check(counts.total == horizon, detail, "total != horizon");
        ok &= check(counts.escape <= counts.escape_bound, detail,
                    "escape bound violated at seed case " + std::to_string(iter));
    }
    return ok;
}

// 7. Gauss cylinder measures: depth-1 closed form to 1e-10 for a <= 50,
//    depth-2 against quadrature over the convergent interval to 1e-9.
bool criterion_gauss(std::string& detail) {
    bool ok = true;
    for (Digit a = 1; a <= 50; ++a) {
        const double expected =
            std::log2(1.0 + 1.0 / (static_cast<double>(a) * (static_cast<double>(a) + 2.0)));
        ok &= check(std::abs(gauss_cylinder_measure(Word({a})).value() - expected) < 1e-10,
                    detail, "depth-1 at a=" + std::to_string(a));
    }
    for (Digit a1 = 1; a1 <= 5; ++a1) {
        for (Digit a2 = 1; a2 <= 5; ++a2) {
            const double u = 1.0 / (static_cast<double>(a1) + 1.0 / static_cast<double>(a2));
            const double v =
                1.0 / (static_cast<double>(a1) + 1.0 / (static_cast<double>(a2) + 1.0));
            const double expected = testing::gauss_measure_quadrature(u, v);
            ok &= check(std::abs(gauss_cylinder_measure(Word({a1, a2})).value() - expected) < 1e-9,
                        detail,
                        "depth-2 at " + std::to_string(a1) + "," + std::to_string(a2));
        }
    }
    return ok;
}

// 8. The decay scan over window lengths {2,4,6,8} is strictly decreasing and
//    matches the frozen exhaustive-cover golden values.
bool criterion_decay_golden(std::string& detail) {
    std::ifstream in(std::string(HOTSPOT_GOLDEN_DIR) + "/hphi_decay_golden.json");
    if (!in) {
        detail = "golden file missing";
        return false;
    }
    nlohmann::json golden = nlohmann::json::parse(in);
    auto scan = h_phi_decay_scan(Word({1}), Rational(2, 5), geometric_model(), Gauge::power(0.9),
                                 {2, 4, 6, 8}, 2);
    bool ok = check(scan.rows.size() == golden.at("rows").size(), detail, "row count");
    if (ok) {
        for (std::size_t i = 0; i < scan.rows.size(); ++i) {
            const auto& expected = golden.at("rows")[i];
            ok &= check(scan.rows[i].window == expected.at("window").get<std::uint64_t>(),
                        detail, "window order");
            ok &= check(std::abs(scan.rows[i].value.value() -
                                 expected.at("value").get<double>()) <= 1e-12,
                        detail, "value at window " + std::to_string(scan.rows[i].window));
        }
    }
    ok &= check(scan.trend == DecayScan::Trend::strictly_decreasing, detail,
                "trend not strictly decreasing");
    return ok;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"counterexample reproduction (exact)", 10.0, criterion_counterexample},
        {"sampled-orbit positive case (4-sigma)", 60.0, criterion_iid_positive},
        {"cover optimization vs exhaustive oracle", 60.0, criterion_cover_oracle},
        {"deviation-set brute-force oracle (exact)", 1.0, criterion_deviation_oracle},
        {"sliding-window identity bound (exact, 200 seeds)", 30.0, criterion_sliding_window},
        {"decomposition accounting (exact, 200 seeds)", 30.0, criterion_decomposition},
        {"gauss cylinder measures vs closed form and quadrature", 5.0, criterion_gauss},
        {"h-measure decay trend vs frozen golden", 30.0, criterion_decay_golden},
    };

    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.time_limit_s) {
            ok = false;
            if (detail.empty()) {
                detail = "exceeded time limit of " + std::to_string(criterion.time_limit_s) + "s";
            }
        }
        if (!ok) ++failures;
        std::printf("%s  %d. %s  [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", index, criterion.name,
                    elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", std::size(criteria));
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
