#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

// End-to-end checks of the installed command-line tool: exit codes, output
// determinism, and the file contract (config hash comment, header row,
// truncation caveats).

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
    const std::string command = std::string(HOTSPOT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out);
    out << body;
}

struct Scratch {
    fs::path dir;
    explicit Scratch(const std::string& name) : dir(fs::path("cli_scratch") / name) {
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    fs::path operator/(const std::string& leaf) const { return dir / leaf; }
    std::string str() const { return dir.string(); }
};

}  // namespace

TEST_CASE("counterexample runs are byte-identical across invocations") {
    Scratch scratch("determinism");
    const std::string config = R"({"params": {"depth": 1, "cutoff": 4, "horizon": 1000}})";
    write_file(scratch / "config.json", config);
    fs::create_directories(scratch / "a");
    fs::create_directories(scratch / "b");
    CHECK(run_cli("counterexample --config " + (scratch / "config.json").string() + " --out " +
                  (scratch / "a").string()) == 0);
    CHECK(run_cli("counterexample --config " + (scratch / "config.json").string() + " --out " +
                  (scratch / "b").string()) == 0);
    for (const char* name :
         {"counterexample.json", "counterexample_cylinders.csv", "counterexample_escape.csv"}) {
        CHECK(read_file(scratch / "a" / name) == read_file(scratch / "b" / name));
    }
}

TEST_CASE("malformed cylinder words are a config error") {
    Scratch scratch("badword");
    write_file(scratch / "config.json", R"({"params": {"word": "0,2"}})");
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 2);
}

TEST_CASE("missing config file is a config error") {
    Scratch scratch("noconfig");
    CHECK(run_cli("freq --config " + (scratch / "nope.json").string() + " --out " +
                  scratch.str()) == 2);
}

TEST_CASE("blown enumeration budgets exit with the budget code") {
    Scratch scratch("budget");
    write_file(scratch / "config.json",
               R"({"params": {"word": "1", "window": 40, "delta": "0.4", "cutoff": 5}})");
    CHECK(run_cli("adev --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 3);
}

TEST_CASE("short digit files succeed with a truncation caveat") {
    Scratch scratch("shortfile");
    write_file(scratch / "digits.txt", "1\n2\n1\n1\n2\n");
    nlohmann::json config{
        {"stream", {{"type", "file"}, {"path", (scratch / "digits.txt").string()}}},
        {"params", {{"word", "1"}, {"horizon", 1000}, {"checkpoints", {2, 1000}}}}};
    write_file(scratch / "config.json", config.dump());
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "freq.json"));
    CHECK(out.at("report").at("exhausted").get<bool>());
    CHECK(out.at("report").at("positions").get<int>() == 5);
    bool truncation_noted = false;
    for (const auto& caveat : out.at("caveats")) {
        if (caveat.get<std::string>().find("stream ended") != std::string::npos) {
            truncation_noted = true;
        }
    }
    CHECK(truncation_noted);
    // the caveat also rides along in CSV output as a comment line
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str() + " --format csv") == 0);
    const std::string csv = read_file(scratch / "freq.csv");
    CHECK(csv.find("# caveat: stream ended") != std::string::npos);
}

TEST_CASE("format selection controls which files appear") {
    Scratch scratch("format");
    write_file(scratch / "config.json", R"({"params": {"word": "1", "horizon": 100}})");
    fs::create_directories(scratch / "csv");
    fs::create_directories(scratch / "json");
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  (scratch / "csv").string() + " --format csv") == 0);
    CHECK(fs::exists(scratch / "csv" / "freq.csv"));
    CHECK_FALSE(fs::exists(scratch / "csv" / "freq.json"));
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  (scratch / "json").string() + " --format json") == 0);
    CHECK(fs::exists(scratch / "json" / "freq.json"));
    CHECK_FALSE(fs::exists(scratch / "json" / "freq.csv"));
}

TEST_CASE("csv files carry the config hash and a header row") {
    Scratch scratch("csvshape");
    write_file(scratch / "config.json", R"({"params": {"word": "1", "horizon": 100}})");
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str() + " --format csv") == 0);
    const std::string body = read_file(scratch / "freq.csv");
    CHECK(body.rfind("# config_hash: ", 0) == 0);
    CHECK(body.find("\nn,hits,freq,mu,deviation\n") != std::string::npos);
    CHECK(body.find("\r") == std::string::npos);
    // the JSON wrapper reports the same hash
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str() + " --format json") == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "freq.json"));
    const std::string hash = out.at("config_hash").get<std::string>();
    CHECK(body.find(hash) != std::string::npos);
}

TEST_CASE("hmeasure through the cli reproduces the antichain optimum") {
    Scratch scratch("hmeasure");
    nlohmann::json config{
        {"measure", {{"type", "bernoulli"}, {"spec", "geometric"}, {"ratio", "1/2"}}},
        {"gauge", {{"type", "identity"}}},
        {"params", {{"targets", {"1", "2"}}}}};
    write_file(scratch / "config.json", config.dump());
    CHECK(run_cli("hmeasure --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "hmeasure.json"));
    CHECK(out.at("report").at("value").at("value").get<double>() == doctest::Approx(0.75));
    CHECK(out.at("report").at("value").at("exact").get<std::string>() == "3/4");
}

TEST_CASE("the seed flag wins over the config seed") {
    Scratch scratch("seeds");
    nlohmann::json config{
        {"stream", {{"type", "iid"}, {"seed", 1}}},
        {"measure", {{"type", "bernoulli"}, {"spec", "geometric"}, {"ratio", "1/2"}}},
        {"params", {{"word", "1"}, {"horizon", 2000}}}};
    write_file(scratch / "config.json", config.dump());
    fs::create_directories(scratch / "flag2");
    fs::create_directories(scratch / "cfg2");
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  (scratch / "flag2").string() + " --seed 2") == 0);
    config["stream"]["seed"] = 2;
    write_file(scratch / "config2.json", config.dump());
    CHECK(run_cli("freq --config " + (scratch / "config2.json").string() + " --out " +
                  (scratch / "cfg2").string()) == 0);
    CHECK(read_file(scratch / "flag2" / "freq.json") ==
          read_file(scratch / "cfg2" / "freq.json"));
}

TEST_CASE("verdict subcommand emits the stable schema") {
    Scratch scratch("verdict");
    nlohmann::json config{
        {"stream", {{"type", "iid"}, {"seed", 42}}},
        {"measure", {{"type", "bernoulli"}, {"spec", "geometric"}, {"ratio", "1/2"}}},
        {"gauge", {{"type", "power"}, {"eta", 0.1}}},
        {"params",
         {{"theorem", "T3"}, {"depth", 1}, {"cutoff", 3}, {"horizon", 20000}, {"eta", {0.5}}}}};
    write_file(scratch / "config.json", config.dump());
    CHECK(run_cli("verdict --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "verdict.json"));
    const auto& report = out.at("report");
    CHECK(report.at("theorem").get<std::string>() == "T3");
    CHECK(report.contains("hypothesis"));
    CHECK(report.contains("tightness"));
    CHECK(report.contains("conclusion"));
    CHECK(report.contains("caveats"));
    CHECK(report.at("tail_condition_met").get<bool>());
}

TEST_CASE("an unreachable tolerance yields an empty deviation-set file") {
    Scratch scratch("adevempty");
    write_file(scratch / "config.json",
               R"({"params": {"word": "1", "window": 2, "delta": "1.5", "cutoff": 3}})");
    CHECK(run_cli("adev --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str()) == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "adev.json"));
    CHECK(out.at("report").at("member_count").get<int>() == 0);
    CHECK(out.at("report").at("members").empty());
    const std::string csv = read_file(scratch / "adev.csv");
    CHECK(csv.find("\nmember\n") != std::string::npos);  // header only, no rows
}

TEST_CASE("iid streams accept an inline spec") {
    Scratch scratch("inlinespec");
    nlohmann::json config{
        {"stream", {{"type", "iid"}, {"spec", "geometric"}, {"ratio", "1/3"}, {"seed", 9}}},
        {"measure", {{"type", "gauss"}}},
        {"params", {{"word", "1"}, {"horizon", 500}}}};
    write_file(scratch / "config.json", config.dump());
    CHECK(run_cli("freq --config " + (scratch / "config.json").string() + " --out " +
                  scratch.str() + " --format json") == 0);
    nlohmann::json out = nlohmann::json::parse(read_file(scratch / "freq.json"));
    CHECK(out.at("report").at("positions").get<int>() == 500);
}

TEST_CASE("unknown subcommands and missing subcommand fail the parse") {
    CHECK(run_cli("no-such-subcommand") != 0);
    CHECK(run_cli("") != 0);
}
