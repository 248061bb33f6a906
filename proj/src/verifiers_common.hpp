#pragma once

// Helpers shared by the verifier translation units.

#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "qnk/verifiers.hpp"

namespace qnk::vdetail {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

inline json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

inline CheckResult residual_result(std::string name, json params, double residual, double tol,
                                   json expected = "< tol", json observed = nullptr) {
    CheckResult r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.params["tol"] = tol;
    r.expected = std::move(expected);
    r.observed = observed.is_null() ? json(residual) : std::move(observed);
    r.residual = residual;
    r.status = (std::isfinite(residual) && residual < tol) ? Status::Pass : Status::Fail;
    return r;
}

struct RankOutcome {
    RankInfo info;
    bool ambiguous = false;
};

inline RankOutcome rank_of(const CMatrix& m, const RankPolicy& policy, double ref = 0) {
    RankInfo info = svd_rank_unchecked(m, policy, ref);
    const bool amb = info.ambiguous(policy);
    return {std::move(info), amb};
}

inline json rank_json(const RankOutcome& r) {
    json j = {{"rank", r.info.rank}};
    j["gap"] = std::isfinite(r.info.gap) ? json(r.info.gap) : json("inf");
    return j;
}

// Rank check: residual is |rank - expected|, and an unvalidated gap is never a pass.
inline CheckResult rank_result(std::string name, json params, long expected, const RankOutcome& r) {
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.expected = expected;
    c.observed = rank_json(r);
    c.residual = std::abs(double(r.info.rank - expected));
    if (r.ambiguous)
        c.status = Status::Ambiguous;
    else
        c.status = c.residual < 0.5 ? Status::Pass : Status::Fail;
    return c;
}

inline CheckResult refused(std::string name, json params, const std::string& why) {
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.expected = nullptr;
    c.observed = why;
    c.residual = 0;
    c.status = Status::Refused;
    return c;
}

// Reason to refuse when tau is within tol of (1/(mn))Lambda for some 1 <= m <= m_max.
// With allow_torsion, tau in (1/n)Lambda itself is accepted.
inline std::optional<std::string> excluded_locus(const AlgebraParams& p, int m_max, bool allow_torsion = false,
                                                 double tol = 1e-8) {
    if (allow_torsion && nearest_torsion(p.tau, p.n, p.eta(), tol)) return std::nullopt;
    for (int m = 1; m <= m_max; ++m)
        if (nearest_torsion(p.tau, m * p.n, p.eta(), tol))
            return "tau within " + std::to_string(tol) + " of (1/" + std::to_string(m * p.n) + ")Lambda";
    return std::nullopt;
}

// Stamp the elapsed time of a batch evenly over the results it produced.
inline void stamp(std::vector<CheckResult>& rs, size_t from, const Stopwatch& w) {
    if (rs.size() <= from) return;
    const double each = w.seconds() / double(rs.size() - from);
    for (size_t i = from; i < rs.size(); ++i) rs[i].wall_time = each;
}

} // namespace qnk::vdetail
