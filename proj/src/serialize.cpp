#include "hotspot/serialize.hpp"

#include <charconv>

namespace hotspot {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string to_string(TheoremKind kind) {
    switch (kind) {
        case TheoremKind::t1:
            return "T1";
        case TheoremKind::t2:
            return "T2";
        case TheoremKind::t3:
            return "T3";
    }
    return "?";
}

std::string to_string(DecayScan::Trend trend) {
    switch (trend) {
        case DecayScan::Trend::strictly_decreasing:
            return "strictly-decreasing";
        case DecayScan::Trend::nonincreasing:
            return "nonincreasing";
        case DecayScan::Trend::mixed:
            return "mixed";
        case DecayScan::Trend::empty:
            return "empty";
    }
    return "?";
}

std::string to_string(Exactness e) {
    return e == Exactness::exact_over_cylinder_covers ? "exact-over-cylinder-covers"
                                                      : "upper-bound";
}

nlohmann::json to_json(const MeasureValue& v) {
    nlohmann::json out{{"value", v.value()}, {"error", v.error()}};
    if (v.is_exact()) out["exact"] = v.rational().to_string();
    return out;
}

nlohmann::json to_json(const FrequencyReport& r) {
    nlohmann::json checkpoints = nlohmann::json::array();
    for (const auto& [n, hits] : r.checkpoints) {
        checkpoints.push_back({{"n", n},
                               {"hits", hits},
                               {"freq", static_cast<double>(hits) / static_cast<double>(n)}});
    }
    return {{"cylinder", r.cylinder.str()},
            {"horizon", r.horizon},
            {"positions", r.positions},
            {"hits", r.hits},
            {"freq", r.freq},
            {"tail_max", r.tail_max},
            {"tail_fraction", r.tail_fraction},
            {"mu", to_json(r.mu)},
            {"checkpoints", checkpoints},
            {"exhausted", r.exhausted}};
}

nlohmann::json to_json(const EscapeReport& r) {
    nlohmann::json grid = nlohmann::json::array();
    for (std::size_t mi = 0; mi < r.cutoffs.size(); ++mi) {
        for (std::size_t wi = 0; wi < r.windows.size(); ++wi) {
            const auto& e = r.at(mi, wi);
            grid.push_back({{"cutoff", r.cutoffs[mi]},
                            {"window", r.windows[wi]},
                            {"sup_fraction", e.sup_fraction},
                            {"count", e.count},
                            {"at_n", e.at_n},
                            {"positions", e.positions}});
        }
    }
    return {{"cutoffs", r.cutoffs},
            {"windows", r.windows},
            {"checkpoints", r.checkpoints},
            {"grid", grid},
            {"exhausted", r.exhausted}};
}

nlohmann::json to_json(const SlidingBlockCheck& r) {
    return {{"lhs", r.lhs.to_string()},
            {"rhs", r.rhs.to_string()},
            {"discrepancy", r.discrepancy.to_string()},
            {"bound", r.bound},
            {"bound_ok", r.bound_ok}};
}

nlohmann::json to_json(const DecompositionCounts& r) {
    return {{"window", r.window},
            {"delta", r.delta.to_string()},
            {"cutoff", r.cutoff},
            {"good", r.good},
            {"escape", r.escape},
            {"deviating", r.deviating},
            {"total", r.total},
            {"escape_positions", r.escape_positions},
            {"escape_bound", r.escape_bound},
            {"bound_ok", r.bound_ok},
            {"exhausted", r.exhausted}};
}

nlohmann::json to_json(const DeviationSet& r) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& c : r.members.members()) members.push_back(c.word.str());
    return {{"cylinder", r.cylinder.str()},
            {"window", r.window},
            {"delta", r.delta.to_string()},
            {"cutoff", r.cutoff},
            {"depth", r.depth},
            {"member_count", r.members.size()},
            {"members", members},
            {"truncated", r.truncated}};
}

nlohmann::json to_json(const HMeasureResult& r) {
    nlohmann::json cover = nlohmann::json::array();
    for (const auto& c : r.optimal_cover.members()) cover.push_back(c.word.str());
    return {{"value", to_json(r.value)},
            {"optimal_cover", cover},
            {"exactness", to_string(r.exactness)}};
}

nlohmann::json to_json(const DecayScan& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"window", row.window},
                        {"member_count", row.member_count},
                        {"value", to_json(row.value)}});
    }
    return {{"rows", rows}, {"trend", to_string(r.trend)}};
}

nlohmann::json to_json(const TheoremVerdict& r) {
    nlohmann::json hypothesis = nlohmann::json::array();
    for (const auto& h : r.hypothesis) {
        hypothesis.push_back({{"cylinder", h.cylinder.str()},
                              {"tail_max", h.tail_max},
                              {"gauge_bound", h.gauge_bound},
                              {"mu", h.mu},
                              {"pass", h.pass}});
    }
    nlohmann::json envelope = nlohmann::json::array();
    for (const auto& e : r.envelope) {
        envelope.push_back({{"eta", e.eta}, {"sup_ratio", e.sup_ratio}});
    }
    nlohmann::json tail = nlohmann::json::array();
    for (const auto& t : r.tail_condition) {
        tail.push_back({{"eta0", t.eta0},
                        {"converges", t.converges},
                        {"value_or_bound", t.value_or_bound}});
    }
    nlohmann::json decay = nlohmann::json::array();
    for (const auto& d : r.hmeasure_decay) {
        decay.push_back({{"cylinder", d.cylinder.str()},
                         {"delta", d.delta.to_string()},
                         {"scan", to_json(d.scan)}});
    }
    nlohmann::json conclusion = nlohmann::json::array();
    for (const auto& c : r.conclusion) {
        conclusion.push_back({{"cylinder", c.cylinder.str()},
                              {"freq", c.freq},
                              {"mu", c.mu},
                              {"deviation", c.deviation},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass}});
    }
    return {{"theorem", to_string(r.kind)},
            {"hypothesis", hypothesis},
            {"hypothesis_all_pass", r.hypothesis_all_pass},
            {"envelope", envelope},
            {"tail_condition", tail},
            {"tail_condition_met", r.tail_condition_met},
            {"hmeasure_decay", decay},
            {"decay_all_trending", r.decay_all_trending},
            {"tightness", to_json(r.tightness)},
            {"tightness_sup", r.tightness_sup},
            {"conclusion", conclusion},
            {"conclusion_all_pass", r.conclusion_all_pass},
            {"caveats", r.caveats}};
}

nlohmann::json to_json(const CounterexampleReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.cylinders) {
        rows.push_back({{"cylinder", row.cylinder.str()},
                        {"hits", row.hits},
                        {"freq", row.freq},
                        {"mu", row.mu}});
    }
    return {{"horizon", r.horizon},
            {"cylinders", rows},
            {"max_hits", r.max_hits},
            {"witness_digit", r.witness_digit},
            {"witness_mass", r.witness_mass},
            {"escape", to_json(r.escape)},
            {"caveats", r.caveats}};
}

namespace {

std::string csv_head(const CsvMeta& meta, std::string_view header) {
    std::string out = "# config_hash: ";
    out += meta.config_hash;
    out += "\n";
    for (const auto& caveat : meta.caveats) {
        out += "# caveat: ";
        out += caveat;
        out += "\n";
    }
    out += header;
    out += "\n";
    return out;
}

}  // namespace

std::string frequency_csv(const FrequencyReport& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "n,hits,freq,mu,deviation");
    const double mu = r.mu.value();
    for (const auto& [n, hits] : r.checkpoints) {
        const double freq = static_cast<double>(hits) / static_cast<double>(n);
        out += std::to_string(n) + "," + std::to_string(hits) + "," + format_double(freq) + "," +
               format_double(mu) + "," + format_double(std::abs(freq - mu)) + "\n";
    }
    return out;
}

std::string escape_csv(const EscapeReport& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "cutoff,window,sup_fraction,count,at_n,positions");
    for (std::size_t mi = 0; mi < r.cutoffs.size(); ++mi) {
        for (std::size_t wi = 0; wi < r.windows.size(); ++wi) {
            const auto& e = r.at(mi, wi);
            out += std::to_string(r.cutoffs[mi]) + "," + std::to_string(r.windows[wi]) + "," +
                   format_double(e.sup_fraction) + "," + std::to_string(e.count) + "," +
                   std::to_string(e.at_n) + "," + std::to_string(e.positions) + "\n";
        }
    }
    return out;
}

std::string deviation_csv(const DeviationSet& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "member");
    for (const auto& c : r.members.members()) out += c.word.str() + "\n";
    return out;
}

std::string hmeasure_csv(const HMeasureResult& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "value,error,exactness,cover_size");
    out += format_double(r.value.value()) + "," + format_double(r.value.error()) + "," +
           to_string(r.exactness) + "," + std::to_string(r.optimal_cover.size()) + "\n";
    return out;
}

std::string decay_csv(const DecayScan& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "window,member_count,value");
    for (const auto& row : r.rows) {
        out += std::to_string(row.window) + "," + std::to_string(row.member_count) + "," +
               format_double(row.value.value()) + "\n";
    }
    return out;
}

std::string verdict_csv(const TheoremVerdict& r, const CsvMeta& meta) {
    std::string out = csv_head(
        meta,
        "cylinder,mu,tail_max,gauge_bound,hypothesis_pass,freq,deviation,tolerance,conclusion_pass");
    for (std::size_t i = 0; i < r.hypothesis.size(); ++i) {
        const auto& h = r.hypothesis[i];
        const auto& c = r.conclusion[i];
        out += "\"" + h.cylinder.str() + "\"," + format_double(h.mu) + "," +
               format_double(h.tail_max) + "," + format_double(h.gauge_bound) + "," +
               (h.pass ? "true" : "false") + "," + format_double(c.freq) + "," +
               format_double(c.deviation) + "," + format_double(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

std::string counterexample_cylinders_csv(const CounterexampleReport& r, const CsvMeta& meta) {
    std::string out = csv_head(meta, "cylinder,hits,freq,mu");
    for (const auto& row : r.cylinders) {
        out += "\"" + row.cylinder.str() + "\"," + std::to_string(row.hits) + "," +
               format_double(row.freq) + "," + format_double(row.mu) + "\n";
    }
    return out;
}

std::string counterexample_escape_csv(const CounterexampleReport& r, const CsvMeta& meta) {
    return escape_csv(r.escape, meta);
}

std::string verdict_text(const TheoremVerdict& r) {
    std::string out = "verdict " + to_string(r.kind) + "\n";
    out += "\nhypothesis (limsup proxy vs gauge bound)\n";
    for (const auto& h : r.hypothesis) {
        out += "  [" + h.cylinder.str() + "] tail_max=" + format_double(h.tail_max) +
               " bound=" + format_double(h.gauge_bound) + (h.pass ? "  ok" : "  VIOLATED") +
               "\n";
    }
    if (!r.tail_condition.empty()) {
        out += "\ntail series sum p_a^(1-eta0)\n";
        for (const auto& t : r.tail_condition) {
            out += "  eta0=" + format_double(t.eta0) +
                   (t.converges ? "  converges, sum=" + format_double(t.value_or_bound)
                                : "  diverges") +
                   "\n";
        }
    }
    if (!r.envelope.empty()) {
        out += "\nasymptotic envelope ratios\n";
        for (const auto& e : r.envelope) {
            out += "  eta=" + format_double(e.eta) +
                   "  sup ratio=" + format_double(e.sup_ratio) + "\n";
        }
    }
    if (!r.hmeasure_decay.empty()) {
        out += "\nh-measure decay of the deviation sets\n";
        for (const auto& d : r.hmeasure_decay) {
            out += "  [" + d.cylinder.str() + "] delta=" + d.delta.to_string() +
                   "  trend=" + to_string(d.scan.trend) + " ";
            for (const auto& row : d.scan.rows) {
                out += " l=" + std::to_string(row.window) + ":" +
                       format_double(row.value.value());
            }
            out += "\n";
        }
    }
    out += "\ntightness diagnostic: sup escape fraction " + format_double(r.tightness_sup) +
           "\n";
    out += "\nconclusion (|freq - mu| vs tolerance)\n";
    for (const auto& c : r.conclusion) {
        out += "  [" + c.cylinder.str() + "] freq=" + format_double(c.freq) +
               " mu=" + format_double(c.mu) + " dev=" + format_double(c.deviation) +
               " tol=" + format_double(c.tolerance) + (c.pass ? "  ok" : "  VIOLATED") + "\n";
    }
    out += "\n";
    out += r.hypothesis_all_pass ? "hypotheses: all rows pass" : "hypotheses: some rows fail";
    out += "; ";
    out += r.conclusion_all_pass ? "conclusion: all rows pass" : "conclusion: some rows fail";
    out += "\ncaveats:\n";
    for (const auto& caveat : r.caveats) out += "  - " + caveat + "\n";
    return out;
}

}  // namespace hotspot
