#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qnk/cli.hpp"

using namespace qnk;

namespace {

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qnk-verify");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qnk_cli_test_" + name);
}

} // namespace

TEST_CASE("exit code 0 when everything passes") {
    const auto out = tmp("qybe.json");
    CHECK(invoke({"--n", "2", "--out", out.string(), "check", "qybe"}) == 0);
    const json j = json::parse(slurp(out));
    CHECK(j["version"] == kVersion);
    CHECK(j["config"]["n"] == 2);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["results"].size() > 0);
    std::filesystem::remove(out);
}

TEST_CASE("exit code 1 when a check fails") {
    // the tau -> 0 limits are first order and miss the 1e-2 bar at n = 3
    const auto out = tmp("limits.json");
    CHECK(invoke({"--out", out.string(), "limits"}) == 1);
    std::filesystem::remove(out);
}

TEST_CASE("exit code 2 on configuration errors") {
    CHECK(invoke({"--n", "4", "--k", "2", "check", "qybe"}) == 2);
    CHECK(invoke({"--eta", "0.3,-1", "check", "qybe"}) == 2);
    CHECK(invoke({"--d-max", "9", "hilbert"}) == 2);
    CHECK(invoke({"--format", "xml", "check", "qybe"}) == 2);
    const auto cfg = tmp("bad.json");
    std::ofstream(cfg) << R"({"n": 3, "colour": "blue"})";
    CHECK(invoke({"--config", cfg.string(), "check", "qybe"}) == 2);
    std::filesystem::remove(cfg);
}

TEST_CASE("exit codes from a report") {
    Report r;
    CHECK(exit_code(r, false) == 0);
    r.results.push_back({"x", json::object(), 0, 0, 0, Status::Ambiguous, 0});
    CHECK(exit_code(r, false) == 1);
    CHECK(exit_code(r, true) == 0);
    r.results.push_back({"y", json::object(), 0, 0, 0, Status::Refused, 0});
    CHECK(exit_code(r, true) == 1);
}

TEST_CASE("config file overlay, flags win") {
    Config cfg;
    apply_config_json(cfg, json::parse(R"({"n": 4, "k": 3, "eta": [0.2, 1.1], "d_max": 2,
                                          "checks": ["qybe", "det"], "tol_det": 1e-5, "seed": 9})"));
    CHECK(cfg.n == 4);
    CHECK(cfg.k == 3);
    CHECK(cfg.eta == cplx(0.2, 1.1));
    CHECK(cfg.d_max == 2);
    CHECK(cfg.checks == std::vector<std::string>{"qybe", "det"});
    CHECK(cfg.tol.det == 1e-5);
    CHECK(cfg.seed == 9u);
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS(apply_config_json(cfg, json::array()), Error);

    const auto file = tmp("overlay.json");
    const auto out = tmp("overlay_out.json");
    std::ofstream(file) << R"({"n": 3, "k": 2})";
    CHECK(invoke({"--config", file.string(), "--n", "2", "--k", "1", "--out", out.string(), "check", "inverse"}) == 0);
    const json j = json::parse(slurp(out));
    CHECK(j["config"]["n"] == 2);
    CHECK(j["config"]["k"] == 1);
    std::filesystem::remove(file);
    std::filesystem::remove(out);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
    const auto a = tmp("stable_a.json"), b = tmp("stable_b.json");
    CHECK(invoke({"--n", "2", "--d-max", "3", "--out", a.string(), "report", "all"}) == 1); // limits are red
    CHECK(invoke({"--n", "2", "--d-max", "3", "--out", b.string(), "report", "all"}) == 1);
    CHECK(slurp(a) == slurp(b));
    const auto c = tmp("stable_c.json");
    CHECK(invoke({"--n", "2", "--d-max", "3", "--seed", "5", "--out", c.string(), "report", "all"}) == 1);
    CHECK(slurp(a) != slurp(c));
    for (const auto& p : {a, b, c}) std::filesystem::remove(p);
}

TEST_CASE("selecting a subset does not move the random samples") {
    Config all;
    all.n = 2;
    all.checks = {"qybe", "det"};
    Config one = all;
    one.checks = {"det"};
    const Report ra = run(all), ro = run(one);
    std::vector<std::string> za, zo;
    for (const auto& c : ra.results)
        if (c.name == "det_ratio") za.push_back(c.params.dump());
    for (const auto& c : ro.results)
        if (c.name == "det_ratio") zo.push_back(c.params.dump());
    CHECK(za == zo);
    CHECK_FALSE(za.empty());
}

TEST_CASE("JSON and CSV round trips") {
    Config cfg;
    cfg.n = 2;
    cfg.checks = {"inverse", "twist"};
    const Report r = run(cfg);
    for (Format f : {Format::Json, Format::Csv}) {
        const std::string text = emit(r, f);
        const Report back = parse_report(text, f);
        CHECK(back.version == r.version);
        CHECK(back.config == r.config);
        REQUIRE(back.results.size() == r.results.size());
        for (size_t i = 0; i < r.results.size(); ++i) {
            CHECK(back.results[i].name == r.results[i].name);
            CHECK(back.results[i].params == r.results[i].params);
            CHECK(back.results[i].status == r.results[i].status);
            CHECK(back.results[i].residual == doctest::Approx(r.results[i].residual));
        }
        CHECK(emit(back, f) == text);
    }
    // timings are only written on request
    const json j = json::parse(emit(r, Format::Json));
    CHECK(j["results"][0]["wall_time"].is_null());
    const json t = json::parse(emit(r, Format::Json, true));
    CHECK(t["results"][0]["wall_time"].is_number());
}

TEST_CASE("known checks") {
    const auto& k = known_checks();
    for (const char* name : {"qybe", "transforms", "det", "inverse", "hilbert", "dual", "koszul", "frobenius",
                             "limits", "twist"})
        CHECK(std::find(k.begin(), k.end(), name) != k.end());
    Config cfg;
    cfg.checks = {"nope"};
    CHECK_THROWS_AS(cfg.validate(), Error);
}
