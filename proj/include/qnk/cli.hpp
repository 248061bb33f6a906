#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnk/report.hpp"

namespace qnk {

struct Config {
    int n = 3;
    int k = 1;
    cplx eta = kDefaultEta;
    std::optional<cplx> tau; // default_tau(eta) when unset
    int d_max = 4;
    std::uint64_t seed = 20240611;
    Precision precision = Precision::Double;
    std::vector<std::string> checks{"all"};
    Tolerances tol;
    bool allow_ambiguous = false;
    bool timings = false;
    std::string out;
    Format format = Format::Json;

    void validate() const; // throws Error(InvalidArgument)
    cplx tau_value() const { return tau ? *tau : default_tau(eta); }
    json to_json() const;
};

// Names accepted in Config::checks, in execution order.
const std::vector<std::string>& known_checks();

// Overlay flat keys from a JSON object onto cfg.
void apply_config_json(Config& cfg, const json& j);

Report run(const Config& cfg);

// 0 all pass; 1 some check did not pass (ambiguous is tolerated with allow_ambiguous).
int exit_code(const Report& r, bool allow_ambiguous);

// Full command-line entry point; returns the process exit code.
int cli_main(int argc, char** argv);

} // namespace qnk
