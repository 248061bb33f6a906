#include "qnk/verifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnk/classical.hpp"
#include "verifiers_common.hpp"

namespace qnk {

using namespace vdetail;

const char* to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Ambiguous: return "ambiguous";
    case Status::Refused: return "refused";
    }
    return "fail";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "ambiguous") return Status::Ambiguous;
    if (s == "refused") return Status::Refused;
    throw Error(ErrorCode::InvalidArgument, "unknown status '" + s + "'");
}

Summary Report::summary() const {
    Summary s;
    for (const auto& r : results) {
        ++s.total;
        switch (r.status) {
        case Status::Pass: ++s.pass; break;
        case Status::Fail: ++s.fail; break;
        case Status::Ambiguous: ++s.ambiguous; break;
        case Status::Refused: ++s.refused; break;
        }
    }
    return s;
}

void Report::sort() {
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.params.dump() < b.params.dump();
    });
}

void Report::append(std::vector<CheckResult> more) {
    results.insert(results.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

cplx random_point(Rng& rng, cplx eta) {
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    const double s = u(rng), t = u(rng);
    return s + t * eta;
}

double scaled_residual(const CMatrix& a, const CMatrix& b, double ref, double zero_cut) {
    const double diff = (a - b).norm();
    const double scale = std::max(a.norm(), b.norm());
    if (ref > 0 && scale < zero_cut * ref) return diff / ref;
    if (scale == 0) return 0;
    return diff / scale;
}

json params_echo(const AlgebraParams& p) {
    return {{"n", p.n}, {"k", p.k}, {"eta", cjson(p.eta())}, {"tau", cjson(p.tau)}};
}

namespace {

CMatrix e12(const CMatrix& a, int n) { return embed_pair(a, 1, 3, n); }
CMatrix e23(const CMatrix& a, int n) { return embed_pair(a, 2, 3, n); }
CMatrix e13(const CMatrix& a, int n) {
    const CMatrix p23 = embed_pair(basis_ops(n).P, 2, 3, n);
    return p23 * e12(a, n) * p23;
}

double opnorm(const CMatrix& m) {
    const Eigen::VectorXd s = svd(m, false).sigma;
    return s.size() ? s(0) : 0.0;
}

std::optional<std::string> torsion_refusal(const AlgebraParams& p) { return excluded_locus(p, 1); }

// Reduced coordinates (s, t) of x = (s + t eta)/n.
std::pair<double, double> reduced(cplx x, int n, cplx eta) {
    const double t = n * x.imag() / eta.imag();
    const double s = n * x.real() - t * eta.real();
    return {s, t};
}

double frac(double x) { return x - std::floor(x); }

// Base coordinate in [0,1) whose circle distance to every avoid point is maximal.
double far_from(const std::vector<double>& avoid) {
    double best = 0, best_d = -1;
    for (int i = 0; i < 200; ++i) {
        const double c = (i + 0.5) / 200.0;
        double d = 1;
        for (double a : avoid) {
            const double diff = std::abs(frac(c - a));
            d = std::min({d, diff, 1 - diff});
        }
        if (d > best_d) best_d = d, best = c;
    }
    return best;
}

} // namespace

std::vector<CheckResult> qybe_check(const AlgebraParams& p, int trials, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("qybe2", base, *why));
        return out;
    }
    const int n = p.n;
    const CMatrix P = basis_ops(n).P;
    auto one = [&](int trial, cplx u, cplx v) {
        Stopwatch w;
        const CMatrix Ru = r_matrix(p, u), Rv = r_matrix(p, v), Ruv = r_matrix(p, u + v);
        const CMatrix lhs2 = e12(Ru, n) * e23(Ruv, n) * e12(Rv, n);
        const CMatrix rhs2 = e23(Rv, n) * e12(Ruv, n) * e23(Ru, n);
        json prm = base;
        prm["trial"] = trial;
        prm["u"] = cjson(u);
        prm["v"] = cjson(v);
        auto r2 = residual_result("qybe2", prm, rel_residual(lhs2, rhs2), tol.residual);
        r2.wall_time = w.seconds();
        out.push_back(r2);

        Stopwatch w1;
        const CMatrix Pu = P * Ru, Pv = P * Rv, Puv = P * Ruv;
        const CMatrix lhs1 = e12(Pu, n) * e13(Puv, n) * e23(Pv, n);
        const CMatrix rhs1 = e23(Pv, n) * e13(Puv, n) * e12(Pu, n);
        auto r1 = residual_result("qybe1_PR", prm, rel_residual(lhs1, rhs1), tol.residual);
        r1.wall_time = w1.seconds();
        out.push_back(r1);
    };
    one(-1, 0.0, 0.0);
    for (int t = 0; t < trials; ++t) {
        const cplx u = random_point(rng, p.eta()), v = random_point(rng, p.eta());
        one(t, u, v);
    }
    return out;
}

std::vector<CheckResult> inverse_pair_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("inverse_pair", base, *why));
        return out;
    }
    const int N = p.dim2();
    const CMatrix I = CMatrix::Identity(N, N);
    auto product = [&](cplx z) {
        const CMatrix A = r_matrix(p, z), B = r_matrix(p, -z);
        return std::make_tuple(CMatrix(A * B), opnorm(A) * opnorm(B));
    };
    for (int s = 0; s < 3; ++s) {
        Stopwatch w;
        const cplx z = random_point(rng, p.eta());
        auto [M, ref] = product(z);
        const cplx c = M(0, 0);
        json prm = base;
        prm["z"] = cjson(z);
        auto r = residual_result("inverse_pair", prm, scaled_residual(M, c * I, ref), tol.transform);
        r.observed = {{"c", cjson(c)}, {"residual", r.residual}};
        r.wall_time = w.seconds();
        out.push_back(r);
    }
    {
        Stopwatch w;
        auto [M, ref] = product(0.0);
        json prm = base;
        prm["z"] = cjson(0.0);
        const double res = std::max(std::abs(M(0, 0) - 1.0), (M - I).norm());
        auto r = residual_result("inverse_pair_at_zero", prm, res, 1e-10, "c = 1");
        r.observed = {{"c", cjson(M(0, 0))}, {"residual", res}};
        r.wall_time = w.seconds();
        out.push_back(r);
    }
    for (int sg : {1, -1}) {
        Stopwatch w;
        auto [M, ref] = product(double(sg) * p.tau);
        json prm = base;
        prm["z"] = sg > 0 ? "tau" : "-tau";
        const double res = M.norm() / ref;
        auto r = residual_result("inverse_pair_vanishes", prm, res, tol.residual, "c = 0");
        r.observed = {{"c", cjson(M(0, 0))}, {"norm_over_factors", res}};
        r.wall_time = w.seconds();
        out.push_back(r);
    }
    return out;
}

std::vector<CheckResult> transform_check(const AlgebraParams& p, int samples, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("transform", base, *why));
        return out;
    }
    const int n = p.n;
    const cplx eta = p.eta();
    const BasisOps ops = basis_ops(n);
    const CMatrix In = CMatrix::Identity(n, n);
    const CMatrix SS = kron(ops.S, ops.S), TT = kron(ops.T, ops.T), NN = kron(ops.N, ops.N);
    const AlgebraParams neg = p.with_tau(-p.tau);
    const AlgebraParams t1 = p.with_tau(p.tau + 1.0 / double(n));
    const AlgebraParams te = p.with_tau(p.tau + eta / double(n));
    const double sign = (n - 1) % 2 ? -1.0 : 1.0;
    const double tl = tol.transform;

    auto law = [&](const std::string& name, json prm, const CMatrix& lhs, const CMatrix& rhs) {
        out.push_back(residual_result(name, std::move(prm), rel_residual(lhs, rhs), tl));
    };

    for (int s = 0; s < samples; ++s) {
        const cplx z = random_point(rng, eta);
        json prm = base;
        prm["sample"] = s;
        prm["z"] = cjson(z);
        Stopwatch w;
        const size_t from = out.size();
        const CMatrix R = r_matrix(p, z);
        law("transform_z_plus_1_over_n", prm, r_matrix(p, z + 1.0 / double(n)),
            sign * kron(In, matrix_power(ops.S, -p.k)) * R * kron(matrix_power(ops.S, p.k), In));
        law("transform_z_plus_eta_over_n", prm, r_matrix(p, z + eta / double(n)),
            b_fn(p, z) * kron(In, matrix_power(ops.T, -1)) * R * kron(ops.T, In));
        const CMatrix Rneg = r_matrix(neg, z);
        law("transform_minus_z_swap", prm, r_matrix(p, -z), e_fn(double(n * n) * z) * ops.P * Rneg * ops.P);
        law("transform_minus_z_negation", prm, r_matrix(p, -z), e_fn(double(n * n) * z) * NN * Rneg * NN);
        law("transform_tau_plus_1_over_n", prm, r_matrix(t1, z),
            kron(ops.S, In) * R * kron(matrix_power(ops.S, -1), In));
        law("transform_tau_plus_eta_over_n", prm, r_matrix(te, z),
            e_fn(z) * kron(In, matrix_power(ops.T, -p.kprime)) * R * kron(In, matrix_power(ops.T, p.kprime)));
        law("commute_SS", prm, SS * R, R * SS);
        law("commute_TT", prm, TT * R, R * TT);
        for (int a = -1; a <= 2; ++a)
            for (int b = -1; b <= 2; ++b) {
                const HalfPeriodPoint zeta{a, b};
                const CMatrix C = shift_conjugator(p, zeta);
                const CMatrix lhs = r_matrix(p, z + zeta.value(n, eta));
                const CMatrix rhs = f_fn(p, z, zeta) * kron(In, C).inverse() * R * kron(C, In);
                json q = prm;
                q["zeta"] = {a, b};
                law("transform_zeta_shift", q, lhs, rhs);
            }
        stamp(out, from, w);
    }
    return out;
}

std::vector<CheckResult> det_check(const AlgebraParams& p, int samples, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    base["precision"] = p.theta.precision() == Precision::Extended ? "extended" : "double";
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("det_ratio", base, *why));
        return out;
    }
    const int n = p.n;
    const cplx eta = p.eta();
    const bool ext = p.theta.precision() == Precision::Extended;
    auto ratio = [&](cplx z) -> cplx {
        if (ext) return to_double(determinant_ext(r_matrix_ext(p, to_ext(z))) / det_closed_form_ext(p, to_ext(z)));
        // log form: det R for n >= 5 is far outside double range
        return std::exp(log_determinant(r_matrix(p, z)) - log_det_closed_form(p, z));
    };

    for (int s = 0; s <= samples; ++s) {
        Stopwatch w;
        const cplx z = s == 0 ? cplx(0) : random_point(rng, eta);
        json prm = base;
        prm["z"] = cjson(z);
        const cplx q = ratio(z);
        auto r = residual_result(s == 0 ? "det_ratio_at_zero" : "det_ratio", prm, std::abs(q - 1.0), tol.det,
                                 "ratio = 1");
        r.observed = {{"ratio", cjson(q)}};
        r.wall_time = w.seconds();
        out.push_back(r);
    }

    // Nullity-weighted zero count: one point of each coset +-tau + (1/n)Lambda per cell.
    {
        Stopwatch w;
        const auto plus = rank_of(r_matrix(p, p.tau), p.ranks);
        const auto minus = rank_of(r_matrix(p, -p.tau), p.ranks);
        const long count = 2L * n * n - plus.info.rank - minus.info.rank;
        CheckResult c;
        c.name = "det_zero_count";
        c.params = base;
        c.expected = long(n) * n;
        c.observed = {{"nullity_tau", n * n - plus.info.rank}, {"nullity_minus_tau", n * n - minus.info.rank}};
        c.residual = std::abs(double(count - long(n) * n));
        c.status = (plus.ambiguous || minus.ambiguous) ? Status::Ambiguous
                   : c.residual < 0.5                  ? Status::Pass
                                                       : Status::Fail;
        c.wall_time = w.seconds();
        out.push_back(c);
    }

    // Argument principle around one (1/n)Lambda cell; corner chosen far from 0 and +-tau.
    {
        Stopwatch w;
        auto [st, tt] = reduced(p.tau, n, eta);
        const double cs = far_from({0.0, st, -st}), ct = far_from({0.0, tt, -tt});
        const cplx corner = (cs + ct * eta) / double(n);
        const cplx e1 = 1.0 / double(n), e2 = eta / double(n);
        const cplx verts[5] = {corner, corner + e1, corner + e1 + e2, corner + e2, corner};
        double winding = 0;
        bool resolved = false;
        int steps = 256;
        for (int attempt = 0; attempt < 6 && !resolved; ++attempt, steps *= 2) {
            resolved = true;
            double total = 0;
            for (int e = 0; e < 4 && resolved; ++e) {
                double prev = log_determinant(r_matrix(p, verts[e])).imag();
                for (int i = 1; i <= steps; ++i) {
                    const cplx z = verts[e] + (verts[e + 1] - verts[e]) * (double(i) / steps);
                    const double cur = log_determinant(r_matrix(p, z)).imag();
                    const double darg = std::remainder(cur - prev, 2 * std::numbers::pi);
                    if (std::abs(darg) > 0.5) {
                        resolved = false;
                        break;
                    }
                    total += darg;
                    prev = cur;
                }
            }
            winding = total / (2 * std::numbers::pi);
        }
        json prm = base;
        prm["corner"] = cjson(corner);
        prm["steps_per_edge"] = steps / 2;
        CheckResult c;
        c.name = "det_winding_number";
        c.params = prm;
        c.expected = long(n) * n;
        c.observed = winding;
        c.residual = std::abs(winding - n * n);
        c.status = (resolved && c.residual < 1e-6) ? Status::Pass : Status::Fail;
        c.wall_time = w.seconds();
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> det_k_independence(int n, cplx eta, cplx tau, int samples, Rng& rng,
                                            const Tolerances& tol) {
    std::vector<CheckResult> out;
    const AlgebraParams p1 = AlgebraParams::make(n, 1, eta, tau);
    const AlgebraParams p2 = p1.with_k(n - 1);
    json base = {{"n", n}, {"k", json::array({1, n - 1})}, {"eta", cjson(eta)}, {"tau", cjson(tau)}};
    if (auto why = torsion_refusal(p1)) {
        out.push_back(refused("det_k_independence", base, *why));
        return out;
    }
    for (int s = 0; s < samples; ++s) {
        Stopwatch w;
        const cplx z = random_point(rng, eta);
        const cplx q = std::exp(log_determinant(r_matrix(p1, z)) - log_determinant(r_matrix(p2, z)));
        json prm = base;
        prm["z"] = cjson(z);
        auto r = residual_result("det_k_independence", prm, std::abs(q - 1.0), tol.det, "ratio = 1");
        r.observed = {{"ratio", cjson(q)}};
        r.wall_time = w.seconds();
        out.push_back(r);
    }
    return out;
}

std::vector<CheckResult> nullity_table(const AlgebraParams& p, Rng& rng, const Tolerances&) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("nullity", base, *why));
        return out;
    }
    const int n = p.n, N = p.dim2();
    const cplx eta = p.eta();
    // On (1/2n)Lambda - (1/n)Lambda only the lower bound is claimed.
    const bool half = nearest_torsion(p.tau, 2 * n, eta).has_value();
    for (int sg : {1, -1}) {
        const long want = sg > 0 ? binomial(n + 1, 2) : binomial(n, 2);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Stopwatch w;
                const HalfPeriodPoint zeta{a, b};
                const auto r = rank_of(r_matrix(p, double(sg) * p.tau + zeta.value(n, eta)), p.ranks);
                json prm = base;
                prm["coset"] = sg > 0 ? "tau" : "-tau";
                prm["zeta"] = {a, b};
                const long nullity = N - r.info.rank;
                CheckResult c = rank_result("nullity", prm, N - want, r);
                c.expected = half ? json(">= " + std::to_string(binomial(n + 1, 2))) : json(want);
                c.observed = rank_json(r);
                c.observed["nullity"] = nullity;
                c.residual = std::abs(double(nullity - want));
                if (half && !r.ambiguous) {
                    c.residual = nullity >= binomial(n + 1, 2) ? 0.0 : double(binomial(n + 1, 2) - nullity);
                    c.status = c.residual < 0.5 ? Status::Pass : Status::Fail;
                }
                c.wall_time = w.seconds();
                out.push_back(c);
            }
    }
    for (int s = 0; s < 5; ++s) {
        Stopwatch w;
        cplx z = random_point(rng, eta);
        auto r = rank_of(r_matrix(p, z), p.ranks);
        for (int retry = 0; retry < 3 && r.ambiguous; ++retry) {
            z += 1e-3 * random_point(rng, eta);
            r = rank_of(r_matrix(p, z), p.ranks);
        }
        json prm = base;
        prm["coset"] = "generic";
        prm["z"] = cjson(z);
        CheckResult c = rank_result("nullity", prm, N, r);
        c.expected = 0;
        c.observed["nullity"] = N - r.info.rank;
        c.wall_time = w.seconds();
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> twist_rank_check(const AlgebraParams& p, const Tolerances&) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("twist_rank", base, *why));
        return out;
    }
    const int n = p.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Stopwatch w;
            const HalfPeriodPoint zeta{a, b};
            const auto r = rank_of(r_matrix(p, p.tau + zeta.value(n, p.eta())), p.ranks);
            json prm = base;
            prm["zeta"] = {a, b};
            auto c = rank_result("twist_rank", prm, binomial(n, 2), r);
            c.wall_time = w.seconds();
            out.push_back(c);
        }
    return out;
}

std::vector<CheckResult> theta_property_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    const cplx eta = p.eta();
    const int n = p.n;
    const auto& ctx = p.theta;
    json base = {{"n", n}, {"eta", cjson(eta)}};
    for (int s = 0; s < 3; ++s) {
        Stopwatch w;
        const cplx z = random_point(rng, eta);
        json prm = base;
        prm["z"] = cjson(z);
        const size_t from = out.size();
        // theta(z+1) = theta(z), theta(z+eta) = -e(-z) theta(z)
        const cplx t0 = theta1(z, ctx);
        out.push_back(residual_result("theta_period_1", prm, std::abs(theta1(z + 1.0, ctx) - t0) / std::abs(t0),
                                      tol.theta));
        out.push_back(residual_result("theta_period_eta", prm,
                                      std::abs(theta1(z + eta, ctx) + e_fn(-z) * t0) / std::abs(t0), tol.theta));
        double worst_a = 0, worst_c = 0;
        const cplx c = factor_constant(ctx);
        for (int a = 0; a < n; ++a) {
            const cplx ta = theta_alpha(a, z, ctx);
            worst_a = std::max(worst_a, std::abs(theta_alpha(a, z + 1.0 / double(n), ctx) -
                                                 e_fn(double(a) / n) * ta) / std::abs(ta));
            const cplx lhs = e_fn(-z / 2.0) * theta_alpha(a, z / double(n), ctx);
            const cplx rhs = c * theta_char(double(a) / n + 0.5, 0.5, z, double(n) * eta, ctx.policy());
            worst_c = std::max(worst_c, std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
        }
        out.push_back(residual_result("theta_alpha_period_1_over_n", prm, worst_a, tol.theta));
        out.push_back(residual_result("theta_factor_constant", prm, worst_c, tol.theta));
        const std::pair<double, double> chars[] = {{0, 0}, {0.5, 0.5}, {1.0 / 3, 0.5}, {0.25, -0.2}};
        const std::pair<int, int> shifts[] = {{1, 0}, {0, 1}, {1, 1}, {-1, 2}, {2, -1}};
        double worst = 0;
        for (auto [a, b] : chars)
            for (auto [si, ti] : shifts)
                worst = std::max(worst, theta_char_shift_check(a, b, si, ti, z, eta, ctx.policy()));
        out.push_back(residual_result("theta_char_quasi_periodicity", prm, worst, tol.theta));
        stamp(out, from, w);
    }
    return out;
}

std::vector<CheckResult> belavin_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("belavin", base, *why));
        return out;
    }
    const int n = p.n;
    const CMatrix P = basis_ops(n).P;
    for (int s = 0; s < 3; ++s) {
        Stopwatch w;
        const size_t from = out.size();
        const cplx z = random_point(rng, p.eta());
        const cplx u = random_point(rng, p.eta()), v = random_point(rng, p.eta());
        json prm = base;
        prm["z"] = cjson(z);
        const CMatrix Sk = belavin_sk(p, -double(n) * z);
        const CMatrix PR = double(n) * e_fn(0.5 * n * (n + 1) * z) * P * r_matrix(p, z);
        out.push_back(residual_result("belavin_sk_relation", prm, rel_residual(Sk, PR), tol.residual));
        for (bool twisted : {false, true}) {
            auto S = [&](cplx x) { return twisted ? belavin_sk(p, x) : belavin_s(p, x); };
            const CMatrix Su = S(u), Sv = S(v), Suv = S(u + v);
            const CMatrix lhs = e12(Su, n) * e13(Suv, n) * e23(Sv, n);
            const CMatrix rhs = e23(Sv, n) * e13(Suv, n) * e12(Su, n);
            json q = base;
            q["u"] = cjson(u);
            q["v"] = cjson(v);
            out.push_back(residual_result(twisted ? "belavin_sk_qybe1" : "belavin_s_qybe1", q,
                                          rel_residual(lhs, rhs), tol.residual));
        }
        stamp(out, from, w);
    }
    return out;
}

std::vector<CheckResult> transpose_check(const AlgebraParams& p, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = torsion_refusal(p)) {
        out.push_back(refused("dual_transpose", base, *why));
        return out;
    }
    for (int s = 0; s <= 3; ++s) {
        Stopwatch w;
        const cplx z = s == 0 ? cplx(0) : random_point(rng, p.eta());
        json prm = base;
        prm["z"] = cjson(z);
        auto r = residual_result("dual_transpose", prm, dual_transpose_check(p, z), tol.transform);
        r.wall_time = w.seconds();
        out.push_back(r);
    }
    return out;
}

std::vector<CheckResult> shuffle_check(int max_total) {
    std::vector<CheckResult> out;
    for (int total = 2; total <= max_total; ++total)
        for (int a = 1; a < total; ++a) {
            Stopwatch w;
            const int b = total - a;
            const bool ok = shuffle_identity_check(a, b);
            CheckResult c;
            c.name = "shuffle_decomposition";
            c.params = {{"a", a}, {"b", b}};
            c.expected = true;
            c.observed = ok;
            c.residual = ok ? 0 : 1;
            c.status = ok ? Status::Pass : Status::Fail;
            c.wall_time = w.seconds();
            out.push_back(c);
        }
    return out;
}

} // namespace qnk
