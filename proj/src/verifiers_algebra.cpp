// Checks on V^(x)d: Hilbert series, rank tables, limits, products, lattices, pairings.

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnk/classical.hpp"
#include "qnk/kernels.hpp"
#include "qnk/verifiers.hpp"
#include "verifiers_common.hpp"

namespace qnk {

using namespace vdetail;

namespace {

double opnorm(const CMatrix& m) {
    const Eigen::VectorXd s = svd(m, false).sigma;
    return s.size() ? s(0) : 0.0;
}

std::vector<cplx> reversed(std::vector<cplx> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<cplx> negated(std::vector<cplx> v) {
    for (auto& x : v) x = -x;
    return v;
}

cplx sum(const std::vector<cplx>& v) {
    cplx s = 0;
    for (auto x : v) s += x;
    return s;
}

CheckResult subspace_result(std::string name, json params, const Subspace& a, const Subspace& b, double tol) {
    const auto cmp = subspace_equal(a, b, tol);
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.params["tol"] = tol;
    c.expected = {{"dim", b.dim()}, {"angle", "< tol"}};
    c.observed = {{"dim", a.dim()}, {"angle", cmp.max_principal_angle}};
    c.residual = cmp.max_principal_angle;
    c.status = (a.dim() == b.dim() && cmp.max_principal_angle < tol) ? Status::Pass : Status::Fail;
    return c;
}

CheckResult ambiguous_result(std::string name, json params, const AmbiguousRankError& e) {
    CheckResult c;
    c.name = std::move(name);
    c.params = std::move(params);
    c.expected = nullptr;
    c.observed = {{"rank", e.info().rank}, {"gap", e.info().gap}};
    c.residual = 0;
    c.status = Status::Ambiguous;
    return c;
}

// Runs body, converting an ambiguous rank anywhere in its pipeline into a status.
template <class F>
void guarded(std::vector<CheckResult>& out, const std::string& name, const json& prm, F&& body) {
    Stopwatch w;
    const size_t from = out.size();
    try {
        body();
    } catch (const AmbiguousRankError& e) {
        out.resize(from);
        out.push_back(ambiguous_result(name, prm, e));
    }
    stamp(out, from, w);
}

// V^s (x) K (x) V^t over s + t + 2 = d
std::vector<Subspace> embedded_all(const Subspace& k, int d, int n) {
    std::vector<Subspace> parts;
    for (int s = 0; s + 2 <= d; ++s) parts.push_back(embed_subspace(k, s, d - s - 2, n));
    return parts;
}

long factorial_product(int d) {
    long p = 1, f = 1;
    for (int m = 1; m <= d - 1; ++m) f *= m, p *= f;
    return p;
}

} // namespace

std::vector<CheckResult> hilbert_check(const AlgebraParams& p, int d_max, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = excluded_locus(p, std::max(d_max, 1))) {
        out.push_back(refused("hilbert_rank", base, *why));
        return out;
    }
    const int n = p.n;
    const CMatrix Rt = relation_operator(p);
    for (int d = 0; d <= d_max; ++d) {
        json prm = base;
        prm["d"] = d;
        guarded(out, "hilbert_rank", prm, [&] {
            const OperatorVd F = f_d(p, -p.tau, d);
            const auto r = rank_of(F.matrix, p.ranks, F.ref_scale);
            out.push_back(rank_result("hilbert_rank", prm, binomial(n + d - 1, d), r));
            if (d < 2 || r.ambiguous) return;
            const Subspace K = kernel(F.matrix, p.ranks, F.ref_scale);
            out.push_back(subspace_result("hilbert_kernel_is_relations", prm, K, relation_space(p, d), tol.angle));
            const Subspace im = image(F.matrix, p.ranks, F.ref_scale);
            const Subspace cap = subspace_intersect(embedded_all(kernel(Rt, p.ranks), d, n), p.ranks);
            out.push_back(subspace_result("hilbert_image_is_intersection", prm, im, cap, tol.angle));
            // F_d(-tau) R(tau)_{i,i+1} = 0 = R(tau)_{i,i+1} F_d(-tau)
            const double ref = F.ref_scale * opnorm(Rt);
            double worst = 0;
            for (int i = 1; i <= d - 1; ++i) {
                const CMatrix E = embed_pair(Rt, i, d, n);
                worst = std::max({worst, (F.matrix * E).norm() / ref, (E * F.matrix).norm() / ref});
            }
            out.push_back(residual_result("hilbert_annihilation", prm, worst, tol.residual, "0"));
        });
    }
    return out;
}

std::vector<CheckResult> dual_hilbert_check(const AlgebraParams& p, int d_max, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    const int n = p.n;
    const int top = std::min(d_max, n + 1);
    if (auto why = excluded_locus(p, std::max(top, 1))) {
        out.push_back(refused("dual_hilbert_rank", base, *why));
        return out;
    }
    const CMatrix Rm = r_matrix(p, -p.tau);
    for (int d = 0; d <= top; ++d) {
        json prm = base;
        prm["d"] = d;
        guarded(out, "dual_hilbert_rank", prm, [&] {
            const OperatorVd F = f_d(p, p.tau, d);
            const auto r = rank_of(F.matrix, p.ranks, F.ref_scale);
            out.push_back(rank_result("dual_hilbert_rank", prm, binomial(n, d), r));
            if (d < 2 || r.ambiguous) return;
            const Subspace K = kernel(F.matrix, p.ranks, F.ref_scale);
            const Subspace rel = subspace_sum(embedded_all(image(Rm, p.ranks), d, n), p.ranks);
            out.push_back(subspace_result("dual_kernel_is_relations", prm, K, rel, tol.angle));
            const Subspace im = image(F.matrix, p.ranks, F.ref_scale);
            const Subspace cap = subspace_intersect(embedded_all(kernel(Rm, p.ranks), d, n), p.ranks);
            out.push_back(subspace_result("dual_image_is_intersection", prm, im, cap, tol.angle));
        });
    }
    return out;
}

std::vector<CheckResult> t_rank_table(const AlgebraParams& p, int d, const Tolerances&) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    base["d"] = d;
    if (d < 3) throw Error(ErrorCode::InvalidArgument, "t_rank_table needs d >= 3");
    if (auto why = excluded_locus(p, d)) {
        out.push_back(refused("t_rank", base, *why));
        return out;
    }
    const int n = p.n;
    const cplx tau = p.tau, eta = p.eta();
    const long A = binomial(n + d - 1, d), B = long(n) * binomial(n + d - 2, d - 1);
    const long Ae = binomial(n, d), Be = long(n) * binomial(n, d - 1);
    // Generic point away from every coset m tau + (1/n)Lambda, -d <= m <= d.
    const cplx generic = 0.5 * (1.0 + eta) / double(n) + 0.37 * tau + cplx(0.013, 0.0);
    const cplx shift = HalfPeriodPoint{1, 1}.value(n, eta);

    struct Case {
        std::string label;
        cplx z;
        long want;
    };
    for (bool mirrored : {false, true}) {
        std::vector<Case> cases;
        const double sg = mirrored ? -1.0 : 1.0;
        cases.push_back({"(d-1)tau", sg * double(d - 1) * tau, mirrored ? Be - Ae : B - A});
        for (int m = 1; m <= d - 2; ++m) cases.push_back({std::to_string(m) + "tau", sg * double(m) * tau, 0});
        cases.push_back({"-tau", -sg * tau, mirrored ? Ae : A});
        cases.push_back({"generic", generic, mirrored ? Be : B});
        const size_t base_cases = cases.size();
        for (size_t i = 0; i < base_cases; ++i)
            cases.push_back({cases[i].label + "+zeta", cases[i].z + shift, cases[i].want});
        for (const auto& c : cases) {
            json prm = base;
            prm["table"] = mirrored ? "T(tau,...,tau,z)" : "T(z,-tau,...,-tau)";
            prm["z"] = c.label;
            Stopwatch w;
            std::vector<cplx> args(d - 1, mirrored ? tau : -tau);
            if (mirrored)
                args.back() = c.z;
            else
                args.front() = c.z;
            const OperatorVd T = t_d(p, d, args);
            auto r = rank_of(T.matrix, p.ranks, T.ref_scale);
            auto res = rank_result("t_rank", prm, c.want, r);
            res.wall_time = w.seconds();
            out.push_back(res);
        }
    }
    return out;
}

std::vector<CheckResult> limit_check(int n, int k, cplx eta, int d, const std::vector<int>& m_range,
                                     const Tolerances& tol) {
    std::vector<CheckResult> out;
    const std::vector<double> eps = {1e-2, 5e-3, 2.5e-3, 1.25e-3};
    const cplx dir(0.6, 0.8);
    json base = {{"n", n}, {"k", k}, {"eta", cjson(eta)}, {"tau_direction", cjson(dir)}, {"eps", eps}};

    auto verdict = [&](std::string name, json prm, const std::vector<double>& dev) {
        bool mono = true;
        for (size_t i = 1; i < dev.size(); ++i) mono = mono && dev[i] < dev[i - 1];
        // m = 0 is exact at every epsilon: R(0) = I.
        const bool exact = std::all_of(dev.begin(), dev.end(), [](double x) { return x < 1e-12; });
        CheckResult c;
        c.name = std::move(name);
        c.params = std::move(prm);
        c.params["tol"] = tol.limit;
        c.expected = "decreasing, last < tol";
        // worst observed order of decay between consecutive halvings
        double order = std::numeric_limits<double>::infinity();
        for (size_t i = 1; i < dev.size() && !exact; ++i) order = std::min(order, std::log2(dev[i - 1] / dev[i]));
        c.observed = {{"deviations", dev}, {"monotone", mono || exact}, {"order", exact ? json("exact") : json(order)}};
        c.residual = dev.back();
        c.status = ((mono || exact) && dev.back() < tol.limit) ? Status::Pass : Status::Fail;
        return c;
    };

    for (int m : m_range) {
        Stopwatch w;
        std::vector<double> dev;
        const CMatrix target = sym_op(m, n);
        for (double e : eps) {
            const auto p = AlgebraParams::make(n, k, eta, e * dir);
            dev.push_back(rel_residual(r_matrix(p, double(m) * p.tau), target));
        }
        json prm = base;
        prm["m"] = m;
        auto c = verdict("limit_sym", prm, dev);
        c.wall_time = w.seconds();
        out.push_back(c);
    }
    const double norm = double(factorial_product(d));
    for (int sg : {-1, 1}) {
        Stopwatch w;
        std::vector<double> dev;
        const CMatrix target = sg < 0 ? symmetrizer(d, n) : antisymmetrizer(d, n);
        for (double e : eps) {
            const auto p = AlgebraParams::make(n, k, eta, e * dir);
            const OperatorVd F = f_d(p, double(sg) * p.tau, d);
            // Alt^d V = 0 for d > n: measure F against the product of its factor norms
            dev.push_back(target.norm() == 0 ? svd(F.matrix, false).sigma(0)
                                             : rel_residual(F.value() / norm, target));
        }
        json prm = base;
        prm["d"] = d;
        prm["sign"] = sg < 0 ? "-eps (symmetrizer)" : "+eps (antisymmetrizer)";
        auto c = verdict("limit_F", prm, dev);
        c.wall_time = w.seconds();
        out.push_back(c);
    }
    return out;
}

std::vector<CheckResult> mult_identity_check(const AlgebraParams& p, int a, int b, Rng& rng,
                                             const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    base["a"] = a;
    base["b"] = b;
    if (auto why = excluded_locus(p, a + b + 1)) {
        out.push_back(refused("mult_identity", base, *why));
        return out;
    }
    const int n = p.n;
    std::normal_distribution<double> g;
    auto random_vec = [&](long N) {
        Eigen::VectorXcd v(N);
        for (long i = 0; i < N; ++i) v(i) = cplx(g(rng), g(rng));
        return v;
    };
    for (int sg : {-1, 1}) {
        const cplx z = double(sg) * p.tau;
        json prm = base;
        prm["sign"] = sg < 0 ? "-tau" : "tau";
        Stopwatch w;
        const size_t from = out.size();
        auto M = [&](int x, int y) { return m_ab(p, x, y, z, std::vector<cplx>(x - 1, z), std::vector<cplx>(y - 1, z)); };
        const OperatorVd Mba = M(b, a);
        const OperatorVd Fa = f_d(p, z, a), Fb = f_d(p, z, b), F = f_d(p, z, a + b);
        // compare in units of F; lhs carries the scales of its three factors
        const double shift = std::exp(Mba.log_scale + Fa.log_scale + Fb.log_scale - F.log_scale);
        const CMatrix lhs = Mba.matrix * kron(Fa.matrix, Fb.matrix) * shift;
        out.push_back(residual_result("mult_identity", prm,
                                      scaled_residual(lhs, F.matrix, std::max(1.0, shift)), tol.residual));
        const OperatorVd Md =
            m_ab_decr(p, b, a, z, std::vector<cplx>(b - 1, z), std::vector<cplx>(a - 1, z));
        const CMatrix Md_in_Mba = Md.matrix * std::exp(Md.log_scale - Mba.log_scale);
        out.push_back(residual_result("mult_incr_vs_decr", prm, rel_residual(Mba.matrix, Md_in_Mba), 1e-10));

        // (u*v)*w = u*(v*w) on images of F, with c = 1 when it fits.
        const int c = 1;
        if (a + b + c <= 5) {
            const OperatorVd Fc = f_d(p, z, c);
            // Unit vectors and normalised operators keep every product in range;
            // the two sides differ by the known ratio of the dropped scales.
            const Eigen::VectorXcd u = (Fa.matrix * random_vec(kernels::ipow(n, a))).normalized();
            const Eigen::VectorXcd v = (Fb.matrix * random_vec(kernels::ipow(n, b))).normalized();
            const Eigen::VectorXcd x = (Fc.matrix * random_vec(kernels::ipow(n, c))).normalized();
            const OperatorVd Mcb = M(c, b), Mleft = M(c, a + b), Mright = M(b + c, a);
            const Eigen::VectorXcd uv = Mba.matrix * kron(u, v);
            const Eigen::VectorXcd vx = Mcb.matrix * kron(v, x);
            const Eigen::VectorXcd left = Mleft.matrix * kron(uv, x);
            const double ratio =
                std::exp(Mright.log_scale + Mcb.log_scale - Mleft.log_scale - Mba.log_scale);
            const Eigen::VectorXcd right = Mright.matrix * kron(u, vx) * ratio;
            // products in degree n+1 vanish at +tau, so judge against the factor norms
            const double ref = std::max(1.0, ratio);
            json q = prm;
            q["c"] = c;
            out.push_back(residual_result("mult_associativity", q, scaled_residual(left, right, ref), tol.residual));
        }
        stamp(out, from, w);
    }
    return out;
}

std::vector<CheckResult> koszul_check(const AlgebraParams& p, int d, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    base["d"] = d;
    if (auto why = excluded_locus(p, d)) {
        out.push_back(refused("koszul_dim", base, *why));
        return out;
    }
    const int n = p.n;
    const long N = kernels::ipow(n, d);
    const auto W = relation_components(p, d); // W[i-1] = W_i
    auto Sigma = [&](int l) {
        if (l == 0) return Subspace::zero(int(N));
        return subspace_sum(std::vector<Subspace>(W.begin(), W.begin() + l), p.ranks);
    };
    auto Ir = [&](int r) {
        if (r == 0) return Subspace::ambient(int(N));
        return subspace_intersect(std::vector<Subspace>(W.end() - r, W.end()), p.ranks);
    };
    for (int l = 0; l <= d - 1; ++l) {
        const int r = d - l - 1;
        json prm = base;
        prm["ell"] = l;
        prm["r"] = r;
        guarded(out, "koszul_dim", prm, [&] {
            const Subspace cap = subspace_intersect({Sigma(l), Ir(r)}, p.ranks);
            const long want = classical_w_dim(n, d, l, r);
            CheckResult c;
            c.name = "koszul_dim";
            c.params = prm;
            c.expected = want;
            c.observed = cap.dim();
            c.residual = std::abs(double(cap.dim() - want));
            c.status = c.residual < 0.5 ? Status::Pass : Status::Fail;
            out.push_back(c);
        });
        if (l == 0) continue;
        guarded(out, "koszul_distributive", prm, [&] {
            const Subspace prev = Sigma(l - 1);
            const Subspace lhs = subspace_sum({prev, Ir(r + 1)}, p.ranks);
            const Subspace rhs = subspace_intersect({Sigma(l), subspace_sum({prev, Ir(r)}, p.ranks)}, p.ranks);
            out.push_back(subspace_result("koszul_distributive", prm, lhs, rhs, tol.angle));
        });
    }
    return out;
}

std::vector<CheckResult> frobenius_check(const AlgebraParams& p, const Tolerances&) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    const int n = p.n;
    if (auto why = excluded_locus(p, n + 1)) {
        out.push_back(refused("frobenius_pairing", base, *why));
        return out;
    }
    guarded(out, "frobenius_pairing", base, [&] {
        const OperatorVd F = f_d(p, p.tau, n);
        const auto top = rank_of(F.matrix, p.ranks, F.ref_scale);
        out.push_back(rank_result("frobenius_top_rank", base, 1, top));
        const OperatorVd F1 = f_d(p, p.tau, n + 1);
        out.push_back(rank_result("frobenius_vanishing_rank", base, 0, rank_of(F1.matrix, p.ranks, F1.ref_scale)));
        if (top.ambiguous || top.info.rank != 1) return;
        // u spans im F_n(tau); row u^H F holds the coefficient of every basis tensor.
        const Subspace im = image(F.matrix, p.ranks, F.ref_scale);
        const Eigen::RowVectorXcd coeff = im.basis.col(0).adjoint() * F.matrix;
        for (int i = 0; i <= n; ++i) {
            const long rows = kernels::ipow(n, i), cols = kernels::ipow(n, n - i);
            CMatrix C(rows, cols);
            for (long j = 0; j < rows; ++j)
                for (long k = 0; k < cols; ++k) C(j, k) = coeff(j * cols + k);
            json prm = base;
            prm["i"] = i;
            out.push_back(rank_result("frobenius_pairing", prm, binomial(n, i),
                                      rank_of(C, p.ranks, coeff.norm())));
        }
    });
    return out;
}

std::vector<CheckResult> dual_algebra_check(const AlgebraParams& p, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    if (auto why = excluded_locus(p, 2)) {
        out.push_back(refused("dual_algebra", base, *why));
        return out;
    }
    const int n = p.n;
    const AlgebraParams q = AlgebraParams(n, n - p.k, -p.tau, p.theta, p.ranks);
    json prm = base;
    prm["dual_k"] = n - p.k;
    guarded(out, "dual_algebra", prm, [&] {
        const CMatrix Rt = r_matrix(p, p.tau);
        const CMatrix RtT = Rt.transpose();
        out.push_back(subspace_result("dual_algebra_transpose_image", prm, image(RtT, p.ranks),
                                      image(r_matrix(q, -p.tau), p.ranks), tol.angle));
        // Annihilator of rel = ker R(tau)^T; it matches im R_{n,n-k,-tau}(tau).
        const Subspace ann = kernel(RtT, p.ranks);
        out.push_back(subspace_result("dual_algebra_annihilator", prm, ann, image(r_matrix(q, p.tau), p.ranks),
                                      tol.angle));
        CheckResult c;
        c.name = "dual_algebra_quadratic_dim";
        c.params = prm;
        c.expected = {{"relations", binomial(n + 1, 2)}, {"degree_two", binomial(n, 2)}};
        c.observed = {{"relations", ann.dim()}, {"degree_two", n * n - ann.dim()}};
        c.residual = std::abs(double(ann.dim() - binomial(n + 1, 2)));
        c.status = c.residual < 0.5 ? Status::Pass : Status::Fail;
        out.push_back(c);
    });
    return out;
}

namespace {

// matrix * exp(log): products of chains overflow doubles quickly at d = 5
struct Scaled {
    CMatrix m;
    double log = 0;
};

Scaled scaled(const OperatorVd& o) { return {o.matrix, o.log_scale}; }

Scaled operator*(const Scaled& a, const Scaled& b) {
    Scaled r{a.m * b.m, a.log + b.log};
    if (const double nrm = r.m.norm(); nrm > 0) {
        r.m *= 1.0 / nrm;
        r.log += std::log(nrm);
    }
    return r;
}

double rel_residual(const Scaled& a, const Scaled& b) {
    const double shift = b.log - a.log;
    if (std::abs(shift) > 600) return 1.0; // sizes differ by far more than any rounding
    return qnk::rel_residual(a.m, b.m * std::exp(shift));
}

} // namespace

std::vector<CheckResult> chain_identity_check(const AlgebraParams& p, int d, Rng& rng, const Tolerances& tol) {
    std::vector<CheckResult> out;
    json base = params_echo(p);
    base["d"] = d;
    if (auto why = excluded_locus(p, 1)) {
        out.push_back(refused("chain_identity", base, *why));
        return out;
    }
    const int n = p.n;
    const cplx eta = p.eta();
    Stopwatch w;
    std::vector<cplx> z(d - 1);
    for (auto& x : z) x = random_point(rng, eta);
    const std::vector<cplx> head(z.begin(), z.end() - 1), tail(z.begin() + 1, z.end());
    const Scaled T = scaled(t_d(p, d, z));
    auto chain = [&](ChainKind kind, std::vector<cplx> t) { return scaled(s_chain(p, d, {kind, 1, d, std::move(t)})); };
    auto left = [&](const OperatorVd& o) { return Scaled{embed_left(o.matrix, d, n), o.log_scale}; };
    auto right = [&](const OperatorVd& o) { return Scaled{embed_right(o.matrix, d, n), o.log_scale}; };
    auto L = [&](const std::vector<cplx>& a) { return left(t_d(p, d - 1, a)); };
    auto R = [&](const std::vector<cplx>& a) { return right(t_d(p, d - 1, a)); };
    const std::pair<std::string, Scaled> forms[] = {
        {"TL_Sdown", L(head) * chain(ChainKind::FwdDown, z)},
        {"TR_Sup", R(tail) * chain(ChainKind::FwdUp, reversed(z))},
        {"Srevup_TL", chain(ChainKind::RevUp, z) * L(tail)},
        {"Srevdown_TR", chain(ChainKind::RevDown, reversed(z)) * R(head)},
    };
    for (const auto& [label, m] : forms) {
        json prm = base;
        prm["form"] = label;
        out.push_back(residual_result("chain_t_factorization", prm, rel_residual(T, m), tol.transform));
    }
    for (int a = 1; a < d; ++a) {
        const int b = d - a;
        std::vector<cplx> x(a - 1), y(b - 1);
        for (auto& v : x) v = random_point(rng, eta);
        for (auto& v : y) v = random_point(rng, eta);
        const cplx zz = random_point(rng, eta);
        std::vector<cplx> all = x;
        all.push_back(zz);
        all.insert(all.end(), y.begin(), y.end());
        const OperatorVd Ta = t_d(p, a, x), Tb = t_d(p, b, y);
        const Scaled TRa = right(Ta), TLa = left(Ta), TRb = right(Tb), TLb = left(Tb);
        const Scaled Mxy = scaled(m_ab(p, a, b, zz, reversed(x), y));
        json prm = base;
        prm["a"] = a;
        prm["b"] = b;
        out.push_back(residual_result("chain_TMT", prm, rel_residual(scaled(t_d(p, d, all)), Mxy * TRa * TLb),
                                      tol.transform));
        out.push_back(residual_result("chain_TM_MT_left", prm,
                                      rel_residual(TLa * scaled(m_ab(p, a, b, zz + sum(x), negated(x), y)), Mxy * TRa),
                                      tol.transform));
        out.push_back(residual_result(
            "chain_TM_MT_right", prm,
            rel_residual(TRb * scaled(m_ab(p, a, b, zz + sum(y), reversed(x), negated(reversed(y)))), Mxy * TLb),
            tol.transform));
    }
    stamp(out, 0, w);
    return out;
}

} // namespace qnk
