#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qnk/tensorops.hpp"

namespace qnk {

using json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Ambiguous, Refused };
const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
    std::string name;
    json params = json::object();
    json expected;
    json observed;
    double residual = 0;
    Status status = Status::Fail;
    double wall_time = 0; // seconds
};

struct Summary {
    int total = 0, pass = 0, fail = 0, ambiguous = 0, refused = 0;
};

struct Report {
    std::string version;
    json config = json::object();
    std::vector<CheckResult> results;

    Summary summary() const;
    void sort(); // by (name, params)
    void append(std::vector<CheckResult> more);
};

struct Tolerances {
    double residual = 1e-8;  // operator identities
    double transform = 1e-9; // transformation laws, transpose, inverse pair
    double det = 1e-6;       // determinant ratios
    double angle = 1e-6;     // largest principal angle for subspace equality
    double theta = 1e-10;    // theta quasi-periodicity
    double limit = 1e-2;     // tau -> 0 limits at the smallest epsilon
};

using Rng = std::mt19937_64;

// Point s + t*eta with s, t uniform in [-1/2, 1/2).
cplx random_point(Rng& rng, cplx eta);

// ||a-b|| / max(||a||, ||b||), except that when both sides are numerically zero
// against ref (the product of factor norms) the residual is taken relative to ref.
double scaled_residual(const CMatrix& a, const CMatrix& b, double ref, double zero_cut = 1e-9);

json params_echo(const AlgebraParams& p);

std::vector<CheckResult> qybe_check(const AlgebraParams& p, int trials, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> inverse_pair_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> transform_check(const AlgebraParams& p, int samples, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> det_check(const AlgebraParams& p, int samples, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> det_k_independence(int n, cplx eta, cplx tau, int samples, Rng& rng,
                                            const Tolerances& tol = {});
std::vector<CheckResult> nullity_table(const AlgebraParams& p, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> hilbert_check(const AlgebraParams& p, int d_max, const Tolerances& tol = {});
std::vector<CheckResult> dual_hilbert_check(const AlgebraParams& p, int d_max, const Tolerances& tol = {});
std::vector<CheckResult> t_rank_table(const AlgebraParams& p, int d, const Tolerances& tol = {});
std::vector<CheckResult> limit_check(int n, int k, cplx eta, int d, const std::vector<int>& m_range,
                                     const Tolerances& tol = {});
std::vector<CheckResult> mult_identity_check(const AlgebraParams& p, int a, int b, Rng& rng,
                                             const Tolerances& tol = {});
std::vector<CheckResult> koszul_check(const AlgebraParams& p, int d, const Tolerances& tol = {});
std::vector<CheckResult> frobenius_check(const AlgebraParams& p, const Tolerances& tol = {});
std::vector<CheckResult> dual_algebra_check(const AlgebraParams& p, const Tolerances& tol = {});
std::vector<CheckResult> twist_rank_check(const AlgebraParams& p, const Tolerances& tol = {});

// Property suite: theta laws, factor constant, Belavin relations, transpose, shuffles.
std::vector<CheckResult> theta_property_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> belavin_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> transpose_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol = {});
std::vector<CheckResult> shuffle_check(int max_total);
std::vector<CheckResult> chain_identity_check(const AlgebraParams& p, int d, Rng& rng, const Tolerances& tol = {});

} // namespace qnk
