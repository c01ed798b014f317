#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hotspot/analysis.hpp"
#include "hotspot/birkhoff.hpp"

namespace hotspot {

/// Shortest round-trip decimal representation, '.' decimal point,
/// locale-independent.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

std::string to_string(TheoremKind kind);
std::string to_string(DecayScan::Trend trend);
std::string to_string(Exactness e);

nlohmann::json to_json(const MeasureValue& v);
nlohmann::json to_json(const FrequencyReport& r);
nlohmann::json to_json(const EscapeReport& r);
nlohmann::json to_json(const SlidingBlockCheck& r);
nlohmann::json to_json(const DecompositionCounts& r);
nlohmann::json to_json(const DeviationSet& r);
nlohmann::json to_json(const HMeasureResult& r);
nlohmann::json to_json(const DecayScan& r);
nlohmann::json to_json(const TheoremVerdict& r);
nlohmann::json to_json(const CounterexampleReport& r);

/// Comment prologue shared by every CSV: the config hash and any caveats,
/// one `# ...` line each.
struct CsvMeta {
    std::string config_hash;
    std::vector<std::string> caveats;
};

/// CSV bodies. Each starts with the comment prologue, then a header row;
/// '.' decimal separator and '\n' line endings throughout.
std::string frequency_csv(const FrequencyReport& r, const CsvMeta& meta);
std::string escape_csv(const EscapeReport& r, const CsvMeta& meta);
std::string deviation_csv(const DeviationSet& r, const CsvMeta& meta);
std::string hmeasure_csv(const HMeasureResult& r, const CsvMeta& meta);
std::string decay_csv(const DecayScan& r, const CsvMeta& meta);
std::string verdict_csv(const TheoremVerdict& r, const CsvMeta& meta);
std::string counterexample_cylinders_csv(const CounterexampleReport& r, const CsvMeta& meta);
std::string counterexample_escape_csv(const CounterexampleReport& r, const CsvMeta& meta);

/// Console-oriented rendering of a verdict: hypothesis, decay, tightness and
/// conclusion tables with explicit caveats.
std::string verdict_text(const TheoremVerdict& r);

}  // namespace hotspot
