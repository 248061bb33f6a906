#include "qnk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>

namespace qnk {

namespace {

cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidArgument, "expected complex as 're,im', got '" + s + "'");
    }
}

cplx complex_from_json(const json& j) {
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_number()) return {j.get<double>(), 0.0};
    throw Error(ErrorCode::InvalidArgument, "expected complex as [re, im]");
}

Precision parse_precision(const std::string& s) {
    if (s == "double") return Precision::Double;
    if (s == "extended") return Precision::Extended;
    throw Error(ErrorCode::InvalidArgument, "precision must be double or extended");
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw Error(ErrorCode::InvalidArgument, "format must be json or csv");
}

json cj(cplx z) { return json::array({z.real(), z.imag()}); }

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "qybe", "inverse", "transforms", "det", "nullity", "twist", "theta", "belavin", "transpose", "shuffle",
        "chains", "hilbert", "dual", "t_rank", "mult", "koszul", "frobenius", "dual_algebra", "limits"};
    return names;
}

void Config::validate() const {
    auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidArgument, m); };
    if (n < 2 || n > 8) bad("n must lie in [2, 8]");
    if (k < 1 || k >= n || std::gcd(n, k) != 1) bad("k must satisfy 1 <= k < n and gcd(n, k) = 1");
    if (!(eta.imag() > 0)) bad("eta must have positive imaginary part");
    if (d_max < 0 || d_max > 5) bad("d_max must lie in [0, 5]");
    if (checks.empty()) bad("no checks selected");
    for (const auto& c : checks)
        if (c != "all" && std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            bad("unknown check '" + c + "'");
    for (double t : {tol.residual, tol.transform, tol.det, tol.angle, tol.theta, tol.limit})
        if (!(t > 0)) bad("tolerances must be positive");
}

json Config::to_json() const {
    return {{"n", n},
            {"k", k},
            {"eta", cj(eta)},
            {"tau", cj(tau_value())},
            {"d_max", d_max},
            {"seed", seed},
            {"precision", precision == Precision::Extended ? "extended" : "double"},
            {"checks", checks},
            {"tolerances",
             {{"residual", tol.residual},
              {"transform", tol.transform},
              {"det", tol.det},
              {"angle", tol.angle},
              {"theta", tol.theta},
              {"limit", tol.limit}}},
            {"allow_ambiguous", allow_ambiguous},
            {"defaults", {{"eta", cj(kDefaultEta)}, {"tau", "0.1234 + 0.4321*eta"}}}};
}

void apply_config_json(Config& cfg, const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be a JSON object");
    for (const auto& [key, v] : j.items()) {
        if (key == "n") cfg.n = v.get<int>();
        else if (key == "k") cfg.k = v.get<int>();
        else if (key == "eta") cfg.eta = complex_from_json(v);
        else if (key == "tau") cfg.tau = complex_from_json(v);
        else if (key == "d_max" || key == "d-max") cfg.d_max = v.get<int>();
        else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
        else if (key == "precision") cfg.precision = parse_precision(v.get<std::string>());
        else if (key == "checks") cfg.checks = v.is_string() ? std::vector<std::string>{v.get<std::string>()}
                                                             : v.get<std::vector<std::string>>();
        else if (key == "allow_ambiguous" || key == "allow-ambiguous") cfg.allow_ambiguous = v.get<bool>();
        else if (key == "timings") cfg.timings = v.get<bool>();
        else if (key == "out") cfg.out = v.get<std::string>();
        else if (key == "format") cfg.format = parse_format(v.get<std::string>());
        else if (key == "tol_residual") cfg.tol.residual = v.get<double>();
        else if (key == "tol_transform") cfg.tol.transform = v.get<double>();
        else if (key == "tol_det") cfg.tol.det = v.get<double>();
        else if (key == "tol_angle") cfg.tol.angle = v.get<double>();
        else if (key == "tol_theta") cfg.tol.theta = v.get<double>();
        else if (key == "tol_limit") cfg.tol.limit = v.get<double>();
        else throw Error(ErrorCode::InvalidArgument, "unknown config key '" + key + "'");
    }
}

Report run(const Config& cfg) {
    cfg.validate();
    Report report;
    report.version = kVersion;
    report.config = cfg.to_json();
    const auto p = AlgebraParams::make(cfg.n, cfg.k, cfg.eta, cfg.tau_value(), RankPolicy{}, cfg.precision);
    const auto& tol = cfg.tol;
    const bool all = std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end();
    const int D = cfg.d_max;

    const auto& names = known_checks();
    for (size_t idx = 0; idx < names.size(); ++idx) {
        const std::string& name = names[idx];
        if (!all && std::find(cfg.checks.begin(), cfg.checks.end(), name) == cfg.checks.end()) continue;
        // Each check draws from its own stream, so selecting a subset does not move samples.
        Rng rng(cfg.seed + 0x9E3779B97F4A7C15ULL * (idx + 1));
        if (name == "qybe") report.append(qybe_check(p, 20, rng, tol));
        else if (name == "inverse") report.append(inverse_pair_check(p, rng, tol));
        else if (name == "transforms") report.append(transform_check(p, 5, rng, tol));
        else if (name == "det") {
            report.append(det_check(p, 5, rng, tol));
            if (p.n >= 3) report.append(det_k_independence(p.n, p.eta(), p.tau, 5, rng, tol));
        } else if (name == "nullity") report.append(nullity_table(p, rng, tol));
        else if (name == "twist") report.append(twist_rank_check(p, tol));
        else if (name == "theta") report.append(theta_property_check(p, rng, tol));
        else if (name == "belavin") report.append(belavin_check(p, rng, tol));
        else if (name == "transpose") report.append(transpose_check(p, rng, tol));
        else if (name == "shuffle") report.append(shuffle_check(4));
        else if (name == "chains") {
            for (int d = 2; d <= D; ++d) report.append(chain_identity_check(p, d, rng, tol));
        } else if (name == "hilbert") report.append(hilbert_check(p, D, tol));
        else if (name == "dual") report.append(dual_hilbert_check(p, D, tol));
        else if (name == "t_rank") {
            for (int d = 3; d <= D; ++d) report.append(t_rank_table(p, d, tol));
        } else if (name == "mult") {
            for (int a = 1; a < D; ++a)
                for (int b = 1; a + b <= D; ++b) report.append(mult_identity_check(p, a, b, rng, tol));
        } else if (name == "koszul") {
            for (int d = 2; d <= D; ++d) report.append(koszul_check(p, d, tol));
        } else if (name == "frobenius") {
            if (p.n + 1 <= 5) report.append(frobenius_check(p, tol));
        } else if (name == "dual_algebra") report.append(dual_algebra_check(p, tol));
        else if (name == "limits") report.append(limit_check(p.n, p.k, p.eta(), 3, {-2, -1, 0, 1, 2, 3}, tol));
    }
    report.sort();
    return report;
}

int exit_code(const Report& r, bool allow_ambiguous) {
    const Summary s = r.summary();
    if (s.fail > 0 || s.refused > 0) return 1;
    if (s.ambiguous > 0 && !allow_ambiguous) return 1;
    return 0;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Numerical verification of elliptic R-matrix and algebra identities"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<int> n, k, d_max;
    std::optional<std::string> eta, tau, precision, format, out, config;
    std::optional<std::uint64_t> seed;
    bool allow_ambiguous = false, timings = false;
    app.add_option("--n", n, "dimension n (default 3)");
    app.add_option("--k", k, "k, coprime to n (default 1)");
    app.add_option("--eta", eta, "lattice parameter as re,im (default 0.31,1.37)");
    app.add_option("--tau", tau, "tau as re,im (default 0.1234 + 0.4321*eta)");
    app.add_option("--d-max", d_max, "largest tensor degree, <= 5 (default 4)");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--precision", precision, "double or extended");
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--format", format, "json or csv");
    app.add_option("--config", config, "JSON file with flat keys mirroring the flags");
    app.add_flag("--allow-ambiguous", allow_ambiguous, "do not fail on ambiguous ranks");
    app.add_flag("--timings", timings, "record wall times (output no longer byte-stable)");

    std::vector<std::string> selected;
    std::string what;
    auto* check = app.add_subcommand("check", "R-matrix checks");
    check->add_option("what", what, "qybe | transforms | det | inverse")
        ->required()
        ->check(CLI::IsMember({"qybe", "transforms", "det", "inverse"}));
    for (const char* name : {"hilbert", "dual", "koszul", "frobenius", "limits", "twist"})
        app.add_subcommand(name, std::string("run the ") + name + " checks");
    std::string which;
    auto* report = app.add_subcommand("report", "run a suite");
    report->add_option("which", which, "all")->required()->check(CLI::IsMember({"all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Config cfg;
    try {
        if (config) {
            std::ifstream in(*config);
            if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read config file " + *config);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw Error(ErrorCode::InvalidArgument, std::string("bad config JSON: ") + e.what());
            }
            apply_config_json(cfg, j);
        }
        if (n) cfg.n = *n;
        if (k) cfg.k = *k;
        if (eta) cfg.eta = parse_complex(*eta);
        if (tau) cfg.tau = parse_complex(*tau);
        if (d_max) cfg.d_max = *d_max;
        if (seed) cfg.seed = *seed;
        if (precision) cfg.precision = parse_precision(*precision);
        if (format) cfg.format = parse_format(*format);
        if (out) cfg.out = *out;
        if (allow_ambiguous) cfg.allow_ambiguous = true;
        if (timings) cfg.timings = true;

        const auto* sub = app.get_subcommands().front();
        if (sub == check) cfg.checks = {what};
        else if (sub != report) cfg.checks = {sub->get_name()};
        else if (!config) cfg.checks = {"all"};
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const cplx t = cfg.tau_value();
    std::cerr << "qnk-verify " << kVersion << "  n=" << cfg.n << " k=" << cfg.k << " eta=" << cfg.eta.real()
              << (cfg.eta.imag() < 0 ? "" : "+") << cfg.eta.imag() << "i tau=" << t.real()
              << (t.imag() < 0 ? "" : "+") << t.imag() << "i d_max=" << cfg.d_max << " seed=" << cfg.seed
              << "\n  defaults: eta = 0.31+1.37i, tau = 0.1234 + 0.4321*eta\n";

    Report rep;
    try {
        rep = run(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = emit(rep, cfg.format, cfg.timings);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(cfg.out, std::ios::binary);
        o << text;
        if (!o) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 2;
        }
    }
    const Summary s = rep.summary();
    std::cerr << "summary: " << s.total << " checks, " << s.pass << " pass, " << s.fail << " fail, " << s.ambiguous
              << " ambiguous, " << s.refused << " refused\n";
    return exit_code(rep, cfg.allow_ambiguous);
}

} // namespace qnk
