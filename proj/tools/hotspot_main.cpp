// Command-line front end: configure a digit stream, a measure model and a
// gauge, run one analysis, and emit CSV/JSON reports. All randomness flows
// from the config seed; identical configs produce byte-identical outputs.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hotspot/analysis.hpp"
#include "hotspot/serialize.hpp"

namespace {

using nlohmann::json;
using namespace hotspot;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::string format = "both";
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--config", opts.config_path, "config file (JSON)");
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--seed", opts.seed, "override the stream seed");
    sub->add_option("--format", opts.format, "csv, json or both")
        ->check(CLI::IsMember({"csv", "json", "both"}));
}

json load_config(const CommonOpts& opts) {
    json config = json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw ConfigError("cannot open config: " + opts.config_path);
        try {
            config = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
    }
    if (!config.contains("stream")) config["stream"] = {{"type", "ramp"}};
    if (!config.contains("measure")) {
        config["measure"] = {{"type", "bernoulli"}, {"spec", "geometric"}, {"ratio", "1/2"}};
    }
    if (!config.contains("gauge")) config["gauge"] = {{"type", "identity"}};
    if (!config.contains("params")) config["params"] = json::object();
    if (opts.seed) config["stream"]["seed"] = *opts.seed;  // flags win
    return config;
}

template <typename T>
T field_or(const json& obj, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("bad value for '") + key + "'");
    }
}

std::string string_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw ConfigError(std::string("missing '") + key + "'");
    if (obj.at(key).is_number()) return obj.at(key).dump();
    if (!obj.at(key).is_string()) throw ConfigError(std::string("'") + key + "' must be a string");
    return obj.at(key).get<std::string>();
}

Rational rational_field(const json& obj, const char* key) {
    try {
        return Rational::parse(string_field(obj, key));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad rational for '") + key + "': " + e.what());
    }
}

Rational rational_value(const json& v, const char* what) {
    try {
        if (v.is_number()) return Rational::parse(v.dump());
        if (v.is_string()) return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad rational in ") + what + ": " + e.what());
    }
    throw ConfigError(std::string("bad rational in ") + what);
}

Word word_field(const json& obj, const char* key, const char* fallback = nullptr) {
    std::string text;
    if (obj.contains(key)) {
        text = string_field(obj, key);
    } else if (fallback) {
        text = fallback;
    } else {
        throw ConfigError(std::string("missing '") + key + "'");
    }
    try {
        return Word::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad word for '") + key + "': " + e.what());
    }
}

ProbabilityVector parse_vector(const json& measure) {
    const std::string spec = string_field(measure, "spec");
    try {
        if (spec == "geometric") return ProbabilityVector::geometric(rational_field(measure, "ratio"));
        if (spec == "zeta") return ProbabilityVector::zeta(field_or(measure, "s", 2.0));
        if (spec == "explicit") {
            if (!measure.contains("probs") || !measure.at("probs").is_array()) {
                throw ConfigError("explicit spec needs a 'probs' array");
            }
            std::vector<Rational> head;
            for (const auto& p : measure.at("probs")) head.push_back(rational_value(p, "probs"));
            Rational tail = measure.contains("tail_ratio") ? rational_field(measure, "tail_ratio")
                                                           : Rational(1, 2);
            return ProbabilityVector::explicit_finite(std::move(head), std::move(tail));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad measure: ") + e.what());
    }
    throw ConfigError("unknown measure spec: " + spec);
}

MeasureModel parse_measure(const json& config) {
    const json& measure = config.at("measure");
    const std::string type = string_field(measure, "type");
    if (type == "gauss") return MeasureModel::gauss();
    if (type == "bernoulli") return MeasureModel::bernoulli(parse_vector(measure));
    throw ConfigError("unknown measure type: " + type);
}

DigitStream parse_stream(const json& config, const MeasureModel& model) {
    const json& stream = config.at("stream");
    const std::string type = string_field(stream, "type");
    try {
        if (type == "ramp") return DigitStream{StreamSpec{StreamSpec::Ramp{}}};
        if (type == "periodic") {
            return DigitStream{StreamSpec{StreamSpec::Periodic{word_field(stream, "word")}}};
        }
        if (type == "iid") {
            // an inline spec wins; otherwise sample the configured measure
            if (stream.contains("spec")) {
                return DigitStream{StreamSpec{StreamSpec::Iid{
                    parse_vector(stream), field_or<std::uint64_t>(stream, "seed", 0)}}};
            }
            if (!model.is_bernoulli()) {
                throw ConfigError("iid stream needs an inline spec or a bernoulli measure");
            }
            return DigitStream{StreamSpec{StreamSpec::Iid{
                model.vector(), field_or<std::uint64_t>(stream, "seed", 0)}}};
        }
        if (type == "cf-rational") {
            BigInt num = BigInt::from_decimal(string_field(stream, "num"));
            BigInt den = BigInt::from_decimal(string_field(stream, "den"));
            return DigitStream{StreamSpec{StreamSpec::CfRational{std::move(num), std::move(den)}}};
        }
        if (type == "cf-quadratic") {
            Word pre = word_field(stream, "preperiod", "\xce\xb5");
            Word period = word_field(stream, "period");
            return DigitStream{
                StreamSpec{StreamSpec::CfQuadratic{std::move(pre), std::move(period)}}};
        }
        if (type == "explicit") {
            return DigitStream{StreamSpec{StreamSpec::Explicit{word_field(stream, "word")}}};
        }
        if (type == "file") {
            Word digits = read_digit_file(string_field(stream, "path"));
            return DigitStream{StreamSpec{StreamSpec::Explicit{std::move(digits)}}};
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad stream: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw ConfigError(std::string("bad stream: ") + e.what());
    }
    throw ConfigError("unknown stream type: " + type);
}

Gauge parse_gauge(const json& config) {
    const json& gauge = config.at("gauge");
    const std::string type = string_field(gauge, "type");
    try {
        if (type == "identity") return Gauge::identity();
        if (type == "power") {
            const double eta = field_or(gauge, "eta", 0.1);
            return Gauge::power(1.0 - eta, field_or(gauge, "coeff", 1.0));
        }
        if (type == "exp-sqrt-log") {
            return Gauge::exp_sqrt_log(field_or(gauge, "eta", 1.0), field_or(gauge, "coeff", 1.0));
        }
        if (type == "table") {
            if (!gauge.contains("points") || !gauge.at("points").is_array()) {
                throw ConfigError("table gauge needs a 'points' array");
            }
            std::vector<std::pair<double, double>> pts;
            for (const auto& p : gauge.at("points")) {
                if (!p.is_array() || p.size() != 2) {
                    throw ConfigError("table gauge points must be [t, value] pairs");
                }
                pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
            }
            return Gauge::table(std::move(pts));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad gauge: ") + e.what());
    }
    throw ConfigError("unknown gauge type: " + type);
}

std::vector<std::uint64_t> u64_list(const json& params, const char* key,
                                    std::vector<std::uint64_t> fallback) {
    if (!params.contains(key)) return fallback;
    try {
        return params.at(key).get<std::vector<std::uint64_t>>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("bad list for '") + key + "'");
    }
}

std::vector<Rational> rational_list(const json& params, const char* key,
                                    std::vector<Rational> fallback) {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_array()) throw ConfigError(std::string("'") + key + "' must be a list");
    std::vector<Rational> out;
    for (const auto& v : params.at(key)) out.push_back(rational_value(v, key));
    return out;
}

struct Outputs {
    json report;
    std::vector<std::pair<std::string, std::string>> csv_files;  // (name, body)
    std::vector<std::string> caveats;
};

void write_outputs(const CommonOpts& opts, const json& config, const std::string& name,
                   Outputs outputs) {
    const std::string hash = hex64(fnv1a64(config.dump()));
    std::filesystem::create_directories(opts.out_dir);

    if (opts.format != "csv") {
        json wrapper{{"config", config},
                     {"config_hash", hash},
                     {"caveats", outputs.caveats},
                     {"report", std::move(outputs.report)}};
        const auto path = std::filesystem::path(opts.out_dir) / (name + ".json");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << wrapper.dump(2) << "\n";
        std::cout << path.string() << "\n";
    }
    if (opts.format != "json") {
        for (auto& [file_name, body] : outputs.csv_files) {
            const auto path = std::filesystem::path(opts.out_dir) / file_name;
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            out << body;
            std::cout << path.string() << "\n";
        }
    }
}

std::string config_hash_of(const json& config) { return hex64(fnv1a64(config.dump())); }

CsvMeta csv_meta(const json& config, const Outputs& outputs) {
    return CsvMeta{config_hash_of(config), outputs.caveats};
}

int run_freq(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    DigitStream stream = parse_stream(config, model);
    const json& params = config.at("params");
    Word xi = word_field(params, "word", "1");
    const auto horizon = field_or<std::uint64_t>(params, "horizon", 10000);
    std::vector<std::uint64_t> checkpoints = u64_list(params, "checkpoints", {});
    if (checkpoints.empty()) {
        for (std::uint64_t n = 10; n < horizon; n *= 10) checkpoints.push_back(n);
        if (checkpoints.empty() || checkpoints.back() != horizon) checkpoints.push_back(horizon);
    }
    const double tail_fraction = field_or(params, "tail_fraction", 0.5);

    FrequencyReport report;
    try {
        report = frequency_curve(stream, xi, checkpoints, model, tail_fraction);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Outputs out;
    out.report = to_json(report);
    if (report.exhausted) {
        out.caveats.push_back("stream ended after " + std::to_string(report.positions) +
                              " of " + std::to_string(report.horizon) + " positions");
    }
    out.csv_files.emplace_back("freq.csv", frequency_csv(report, csv_meta(config, out)));
    write_outputs(opts, config, "freq", std::move(out));
    return kExitOk;
}

int run_escape(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    DigitStream stream = parse_stream(config, model);
    const json& params = config.at("params");
    const auto horizon = field_or<std::uint64_t>(params, "horizon", 10000);
    std::vector<std::uint64_t> checkpoints = u64_list(params, "checkpoints", {horizon});
    std::vector<std::uint64_t> windows = u64_list(params, "windows", {1});
    std::vector<std::uint64_t> cutoff_list =
        u64_list(params, "cutoffs", {field_or<std::uint64_t>(params, "cutoff", 4)});
    std::vector<Digit> cutoffs(cutoff_list.begin(), cutoff_list.end());

    EscapeReport report;
    try {
        report = escape_report(stream, cutoffs, windows, checkpoints);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Outputs out;
    out.report = to_json(report);
    if (report.exhausted) out.caveats.push_back("stream ended before the final checkpoint");
    out.csv_files.emplace_back("escape.csv", escape_csv(report, csv_meta(config, out)));
    write_outputs(opts, config, "escape", std::move(out));
    return kExitOk;
}

int run_adev(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    const json& params = config.at("params");
    Word xi = word_field(params, "word", "1");
    const auto window = field_or<std::uint64_t>(params, "window", 2);
    const Rational delta = params.contains("delta") ? rational_value(params.at("delta"), "delta")
                                                    : Rational(2, 5);
    const auto cutoff = field_or<std::uint64_t>(params, "cutoff", 3);
    const auto budget = field_or<std::uint64_t>(params, "budget", kDefaultEnumerationBudget);

    DeviationSet report;
    try {
        report = enumerate_deviation_set(xi, window, delta, model, cutoff, budget);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Outputs out;
    out.report = to_json(report);
    out.caveats.push_back("members truncated to digits <= " + std::to_string(cutoff));
    out.csv_files.emplace_back("adev.csv", deviation_csv(report, csv_meta(config, out)));
    write_outputs(opts, config, "adev", std::move(out));
    return kExitOk;
}

int run_hmeasure(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    Gauge gauge = parse_gauge(config);
    const json& params = config.at("params");
    if (!params.contains("targets") || !params.at("targets").is_array()) {
        throw ConfigError("hmeasure needs params.targets: a list of cylinder words");
    }
    std::vector<Cylinder> cylinders;
    for (const auto& t : params.at("targets")) {
        if (!t.is_string()) throw ConfigError("targets must be word strings");
        try {
            cylinders.emplace_back(Word::parse(t.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("bad target word: ") + e.what());
        }
    }
    CylinderUnion target = CylinderUnion::canonicalize(std::move(cylinders));

    HMeasureResult report = h_phi_exact(target, model, gauge);
    Outputs out;
    out.report = to_json(report);
    out.csv_files.emplace_back("hmeasure.csv", hmeasure_csv(report, csv_meta(config, out)));
    write_outputs(opts, config, "hmeasure", std::move(out));
    return kExitOk;
}

int run_verdict(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    DigitStream stream = parse_stream(config, model);
    Gauge gauge = parse_gauge(config);
    const json& params = config.at("params");

    const std::string kind_text = field_or<std::string>(params, "theorem", "T1");
    TheoremKind kind;
    if (kind_text == "T1") {
        kind = TheoremKind::t1;
    } else if (kind_text == "T2") {
        kind = TheoremKind::t2;
    } else if (kind_text == "T3") {
        kind = TheoremKind::t3;
    } else {
        throw ConfigError("params.theorem must be T1, T2 or T3");
    }

    VerdictParams vp;
    vp.depth_cutoff = field_or<std::size_t>(params, "depth", 2);
    vp.digit_cutoff = field_or<std::uint64_t>(params, "cutoff", 4);
    vp.windows = u64_list(params, "windows", {1});
    vp.horizon = field_or<std::uint64_t>(params, "horizon", 100000);
    vp.checkpoints = u64_list(params, "checkpoints", {});
    vp.deltas = rational_list(params, "delta", {Rational(1, 5)});
    vp.ells = u64_list(params, "ell", {});
    vp.etas = field_or(params, "eta", std::vector<double>{});
    vp.tail_fraction = field_or(params, "tail_fraction", 0.5);
    vp.budget = field_or<std::uint64_t>(params, "budget", kDefaultEnumerationBudget);
    vp.sigma_factor = field_or(params, "sigma_factor", 4.0);
    vp.fixed_tolerance = field_or(params, "fixed_tolerance", 0.0);

    TheoremVerdict report;
    try {
        report = theorem_verdict(kind, stream, model, gauge, vp);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Outputs out;
    out.report = to_json(report);
    out.caveats = report.caveats;
    out.csv_files.emplace_back("verdict.csv", verdict_csv(report, csv_meta(config, out)));
    std::cout << verdict_text(report);
    write_outputs(opts, config, "verdict", std::move(out));
    return kExitOk;
}

int run_counterexample(const CommonOpts& opts) {
    json config = load_config(opts);
    MeasureModel model = parse_measure(config);
    const json& params = config.at("params");
    const auto depth = field_or<std::size_t>(params, "depth", 2);
    const auto cutoff = field_or<std::uint64_t>(params, "cutoff", 5);
    const auto horizon = field_or<std::uint64_t>(params, "horizon", 100000);

    CounterexampleReport report;
    try {
        report = counterexample_report(model, depth, cutoff, horizon);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Outputs out;
    out.report = to_json(report);
    out.caveats = report.caveats;
    const CsvMeta meta = csv_meta(config, out);
    out.csv_files.emplace_back("counterexample_cylinders.csv",
                               counterexample_cylinders_csv(report, meta));
    out.csv_files.emplace_back("counterexample_escape.csv",
                               counterexample_escape_csv(report, meta));
    write_outputs(opts, config, "counterexample", std::move(out));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit statistics and hotspot-criterion diagnostics on countable-alphabet "
                 "shift spaces"};
    app.require_subcommand(1);

    CommonOpts opts;
    struct SubcommandSpec {
        const char* name;
        const char* help;
        int (*run)(const CommonOpts&);
    };
    const SubcommandSpec specs[] = {
        {"freq", "frequency curve of one cylinder along an orbit", run_freq},
        {"escape", "escape-mass diagnostics over a (cutoff, window) grid", run_escape},
        {"adev", "enumerate a truncated deviation set", run_adev},
        {"hmeasure", "gauge Hausdorff measure of a cylinder union", run_hmeasure},
        {"verdict", "hypothesis/conclusion tables for T1, T2 or T3", run_verdict},
        {"counterexample", "the escape-to-infinity orbit report", run_counterexample},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        add_common(sub, opts);
        sub->callback([&opts, &spec]() {
            int code = spec.run(opts);
            if (code != kExitOk) throw CLI::RuntimeError(code);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hotspot::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
