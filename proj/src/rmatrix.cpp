#include "qnk/rmatrix.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace qnk {

namespace {

int mod(long a, int n) { return detail::mod_n(a, n); }

template <class C> C ipow(C x, int e) {
    C r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

// Entries of R_tau(z), column-major by input index. th(alpha, x) = theta_alpha(x).
// The r-th summand always omits the pair theta_{j-i-r}(-z) (front product and
// denominator), which is the removable-singularity rule applied uniformly.
template <class C, class Theta>
std::vector<C> r_entries(int n, int k, const C& z, const C& tau, Theta&& th) {
    std::vector<C> A(n), B(n), T(n), front(n);
    C denom(1);
    for (int a = 0; a < n; ++a) {
        A[a] = th(a, tau - z);
        B[a] = th(a, C(-z));
        T[a] = th(a, tau);
        if (a > 0) denom *= th(a, C(0));
    }
    for (int s = 0; s < n; ++s) {
        C f(1);
        for (int a = 0; a < n; ++a)
            if (a != s) f *= B[a];
        front[s] = f / denom;
    }
    const int N = n * n;
    std::vector<C> out(static_cast<size_t>(N) * N, C(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r) {
                const int s = mod(j - i - r, n);
                C coef = front[s] * A[mod(j - i + long(r) * (k - 1), n)] / T[mod(long(k) * r, n)];
                const int row = mod(j - r, n) * n + mod(i + r, n);
                const int col = i * n + j;
                out[static_cast<size_t>(col) * N + row] += coef;
            }
    return out;
}

void require_generic(const AlgebraParams& p) {
    if (on_torsion(p))
        throw Error(ErrorCode::TauOnTorsion, "tau lies in (1/n)Lambda; use r_plus_limit");
}

} // namespace

AlgebraParams::AlgebraParams(int n_, int k_, cplx tau_, ThetaContext theta_, RankPolicy ranks_)
    : n(n_), k(k_), kprime(0), tau(tau_), theta(std::move(theta_)), ranks(ranks_) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
    if (k < 1 || k >= n || std::gcd(n, k) != 1)
        throw Error(ErrorCode::InvalidArgument, "k must satisfy 1 <= k < n and gcd(n,k) = 1");
    if (theta.n() != n) throw Error(ErrorCode::InvalidArgument, "theta context built for a different n");
    ranks.validate();
    for (int c = 1; c < n; ++c)
        if ((long(k) * c) % n == 1) kprime = c;
}

AlgebraParams AlgebraParams::make(int n, int k, cplx eta, std::optional<cplx> tau, RankPolicy ranks,
                                  Precision precision) {
    ThetaContext ctx(n, LatticeParams(eta), SeriesPolicy{}, precision);
    return AlgebraParams(n, k, tau.value_or(default_tau(eta)), ctx, ranks);
}

AlgebraParams AlgebraParams::with_tau(cplx t) const {
    AlgebraParams q = *this;
    q.tau = t;
    return q;
}

AlgebraParams AlgebraParams::with_k(int k2) const { return AlgebraParams(n, k2, tau, theta, ranks); }

std::optional<HalfPeriodPoint> nearest_torsion(cplx x, int n, cplx eta, double tol) {
    const cplx y = x * double(n);
    const double v = y.imag() / eta.imag();
    const double u = y.real() - v * eta.real();
    HalfPeriodPoint h{static_cast<int>(std::lround(u)), static_cast<int>(std::lround(v))};
    if (std::abs(x - h.value(n, eta)) < tol) return h;
    return std::nullopt;
}

BasisOps basis_ops(int n) {
    BasisOps o;
    o.S = CMatrix::Zero(n, n);
    o.T = CMatrix::Zero(n, n);
    o.N = CMatrix::Zero(n, n);
    o.P = CMatrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a) {
        o.S(a, a) = e_fn(double(a) / n);
        o.T(mod(a + 1, n), a) = 1.0;
        o.N(mod(-a, n), a) = 1.0;
        for (int b = 0; b < n; ++b) o.P(b * n + a, a * n + b) = 1.0;
    }
    return o;
}

CMatrix matrix_power(const CMatrix& m, int e) {
    CMatrix base = e < 0 ? CMatrix(m.fullPivLu().inverse()) : m;
    CMatrix r = CMatrix::Identity(m.rows(), m.cols());
    for (int i = 0; i < std::abs(e); ++i) r = r * base;
    return r;
}

CMatrix r_matrix(const AlgebraParams& p, cplx z) {
    require_generic(p);
    const int N = p.dim2();
    if (p.theta.precision() == Precision::Extended) {
        ExtMatrix m = r_matrix_ext(p, to_ext(z));
        CMatrix out(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) out(i, j) = to_double(m(i, j));
        return out;
    }
    auto th = [&](int a, cplx x) { return theta_alpha(a, x, p.theta); };
    std::vector<cplx> e = r_entries<cplx>(p.n, p.k, z, p.tau, th);
    return Eigen::Map<CMatrix>(e.data(), N, N);
}

ExtMatrix r_matrix_ext(const AlgebraParams& p, const ext_complex& z) {
    require_generic(p);
    const int N = p.dim2();
    auto th = [&](int a, const ext_complex& x) { return theta_alpha_ext(a, x, p.theta); };
    std::vector<ext_complex> e = r_entries<ext_complex>(p.n, p.k, z, to_ext(p.tau), th);
    ExtMatrix m{N, N, std::vector<ext_complex>(static_cast<size_t>(N) * N)};
    for (int col = 0; col < N; ++col)
        for (int row = 0; row < N; ++row) m(row, col) = e[static_cast<size_t>(col) * N + row];
    return m;
}

CMatrix sym_op(int m, int n) {
    return CMatrix::Identity(n * n, n * n) - double(m) * basis_ops(n).P;
}

cplx b_fn(const AlgebraParams& p, cplx z) {
    return e_fn(-double(p.n) * z + p.tau + 0.5 - 0.5 * (p.n + 1) * p.eta());
}

cplx f_fn(int n, cplx eta, cplx z, HalfPeriodPoint zeta, cplx tau) {
    const double a = zeta.a, b = zeta.b;
    return e_fn(-b * n * z) * e_fn(b * tau + 0.5 * (b + a * (n - 1)) - 0.5 * b * (n + b) * eta);
}

cplx f_fn(const AlgebraParams& p, cplx z, HalfPeriodPoint zeta) {
    return f_fn(p.n, p.eta(), z, zeta, p.tau);
}

CMatrix shift_conjugator(const AlgebraParams& p, HalfPeriodPoint zeta) {
    BasisOps o = basis_ops(p.n);
    return matrix_power(o.T, mod(zeta.b, p.n)) * matrix_power(o.S, mod(long(p.k) * zeta.a, p.n));
}

CMatrix r_plus_limit(const AlgebraParams& p, HalfPeriodPoint zeta, int sign) {
    if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
    const int n = p.n;
    const CMatrix C = shift_conjugator(p, zeta);
    const CMatrix I = CMatrix::Identity(n, n);
    const cplx f = f_fn(n, p.eta(), 0.0, zeta, 0.0);
    return f * kron(I, C.inverse()) * sym_op(sign, n) * kron(C, I);
}

namespace {
// I_{(a,b)}: x_i -> omega^{ib} x_{i-a}
CMatrix heis(int n, int a, int b) {
    CMatrix m = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(mod(i - a, n), i) = e_fn(double(mod(long(i) * b, n)) / n);
    return m;
}

CMatrix belavin_sum(const AlgebraParams& p, cplx z, int hstep) {
    require_generic(p);
    const int n = p.n;
    CMatrix out = CMatrix::Zero(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CMatrix I = heis(n, hstep * a, b);
            out += w_fn(a, b, z, p.tau, p.theta) * kron(I, I.adjoint());
        }
    return out;
}
} // namespace

CMatrix belavin_s(const AlgebraParams& p, cplx z) { return belavin_sum(p, z, 1); }

CMatrix belavin_sk(const AlgebraParams& p, cplx z) { return belavin_sum(p, z, -p.kprime); }

cplx det_closed_form(const AlgebraParams& p, cplx z) {
    require_generic(p);
    cplx minus(1), plus(1);
    for (int a = 0; a < p.n; ++a) {
        minus *= theta_alpha(a, -z - p.tau, p.theta) / theta_alpha(a, -p.tau, p.theta);
        plus *= theta_alpha(a, -z + p.tau, p.theta) / theta_alpha(a, p.tau, p.theta);
    }
    return ipow(minus, p.n * (p.n - 1) / 2) * ipow(plus, p.n * (p.n + 1) / 2);
}

cplx log_det_closed_form(const AlgebraParams& p, cplx z) {
    require_generic(p);
    cplx minus(0), plus(0);
    for (int a = 0; a < p.n; ++a) {
        minus += std::log(theta_alpha(a, -z - p.tau, p.theta)) - std::log(theta_alpha(a, -p.tau, p.theta));
        plus += std::log(theta_alpha(a, -z + p.tau, p.theta)) - std::log(theta_alpha(a, p.tau, p.theta));
    }
    const cplx acc = double(p.n * (p.n - 1) / 2) * minus + double(p.n * (p.n + 1) / 2) * plus;
    return {acc.real(), std::remainder(acc.imag(), 2 * std::numbers::pi)};
}

ext_complex det_closed_form_ext(const AlgebraParams& p, const ext_complex& z) {
    require_generic(p);
    const ext_complex tau = to_ext(p.tau);
    ext_complex minus(1), plus(1);
    for (int a = 0; a < p.n; ++a) {
        minus *= theta_alpha_ext(a, ext_complex(-z - tau), p.theta) / theta_alpha_ext(a, ext_complex(-tau), p.theta);
        plus *= theta_alpha_ext(a, ext_complex(-z + tau), p.theta) / theta_alpha_ext(a, tau, p.theta);
    }
    return ipow(minus, p.n * (p.n - 1) / 2) * ipow(plus, p.n * (p.n + 1) / 2);
}

cplx odesskii_prefactor(const AlgebraParams& p, cplx z) {
    require_generic(p);
    cplx f(1);
    for (int a = 0; a < p.n; ++a) f *= theta_alpha(a, -z + p.tau, p.theta) / theta_alpha(a, p.tau, p.theta);
    return f;
}

cplx odesskii_det_closed_form(const AlgebraParams& p, cplx z) {
    require_generic(p);
    const int n = p.n;
    cplx ratio(1);
    for (int a = 0; a < n; ++a)
        ratio *= theta_alpha(a, -z - p.tau, p.theta) / theta_alpha(a, -z + p.tau, p.theta);
    const double sign = ((n * n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    return sign * e_fn(0.5 * n * n * n * (n - 1) * p.tau) * ipow(ratio, n * (n - 1) / 2);
}

double dual_transpose_check(const AlgebraParams& p, cplx z) {
    const CMatrix lhs = r_matrix(p, z).transpose();
    const AlgebraParams q = p.with_k(p.n - p.k).with_tau(-p.tau);
    const CMatrix rhs = e_fn(-double(p.n * p.n) * z) * r_matrix(q, -z);
    return rel_residual(lhs, rhs);
}

CMatrix relation_operator(const AlgebraParams& p) {
    if (auto h = nearest_torsion(p.tau, p.n, p.eta())) return r_plus_limit(p, *h, +1);
    return r_matrix(p, p.tau);
}

} // namespace qnk
