#include "qnk/theta.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "qnk/detail/series.hpp"
#include "qnk/extended.hpp"

namespace qnk {

const char* to_string(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::TruncationNotConverged: return "truncation-not-converged";
    case ErrorCode::DegenerateSample: return "degenerate-sample";
    case ErrorCode::SingularLocus: return "parameter-on-singular-locus";
    case ErrorCode::TauOnTorsion: return "tau-on-torsion";
    case ErrorCode::AmbiguousRank: return "ambiguous-rank";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::EnumerationCap: return "enumeration-cap";
    }
    return "unknown";
}

LatticeParams::LatticeParams(cplx eta_) : eta(eta_) {
    if (!(eta.imag() > 0))
        throw Error(ErrorCode::InvalidArgument, "Im(eta) must be positive");
}

void SeriesPolicy::validate() const {
    if (!(rel_tol > 0)) throw Error(ErrorCode::InvalidArgument, "rel_tol must be positive");
    if (max_index < 10) throw Error(ErrorCode::InvalidArgument, "max_index must be >= 10");
}

struct ThetaContext::Cache {
    std::once_flag once;
    cplx c{0.0, 0.0};
};

ThetaContext::ThetaContext(int n, LatticeParams lattice, SeriesPolicy policy, Precision precision)
    : n_(n), lattice_(lattice), policy_(policy), precision_(precision),
      cache_(std::make_shared<Cache>()) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
    policy_.validate();
}

cplx e_fn(cplx z) { return detail::e_of<cplx>(z); }

cplx theta1(cplx z, const ThetaContext& ctx) {
    if (ctx.precision() == Precision::Extended) return to_double(theta1_ext(to_ext(z), ctx));
    return detail::theta1_reduced<cplx>(z, ctx.eta(), ctx.policy().rel_tol, ctx.policy().max_index);
}

cplx theta_alpha(int alpha, cplx z, const ThetaContext& ctx) {
    if (ctx.precision() == Precision::Extended)
        return to_double(theta_alpha_ext(alpha, to_ext(z), ctx));
    return detail::theta_alpha_t<cplx>(alpha, z, ctx.eta(), ctx.n(), ctx.policy().rel_tol,
                                       ctx.policy().max_index);
}

cplx theta_char(double a, double b, cplx z, cplx eta, const SeriesPolicy& policy) {
    return detail::theta_char_reduced<cplx>(a, b, z, eta, policy.rel_tol, policy.max_index);
}

namespace detail {
cplx theta1_direct(cplx z, cplx eta, const SeriesPolicy& policy) {
    return theta1_direct<cplx>(z, eta, policy.rel_tol, policy.max_index).value;
}
cplx theta_char_direct(double a, double b, cplx z, cplx eta, const SeriesPolicy& policy) {
    return theta_char_direct<cplx>(a, b, z, eta, policy.rel_tol, policy.max_index).value;
}
} // namespace detail

double theta_char_shift_check(double a, double b, int s, int t, cplx z, cplx eta,
                              const SeriesPolicy& policy) {
    auto lhs = detail::theta_char_direct<cplx>(a, b, z + double(s) * eta + double(t), eta,
                                               policy.rel_tol, policy.max_index);
    auto rhs0 = detail::theta_char_direct<cplx>(a, b, z, eta, policy.rel_tol, policy.max_index);
    cplx rhs = e_fn(a * t - double(s) * (z + b) - 0.5 * s * s * eta) * rhs0.value;
    // near a zero both sides are tiny; fall back to the series scale
    double denom = std::max({std::abs(lhs.value), std::abs(rhs), 1e-8 * lhs.scale});
    return std::abs(lhs.value - rhs) / denom;
}

cplx factor_constant(const ThetaContext& ctx) {
    auto& cache = *ctx.cache_;
    std::call_once(cache.once, [&] {
        const int n = ctx.n();
        const std::array<std::pair<int, cplx>, 4> samples{{
            {0, {0.3, 0.2}}, {1, {0.7, 0.1}}, {n - 1, {0.41, -0.23}}, {0, {-0.17, 0.37}}}};
        for (auto [alpha, z] : samples) {
            cplx num = e_fn(-0.5 * z) * theta_alpha(alpha, z / double(n), ctx);
            cplx den = theta_char(double(alpha) / n + 0.5, 0.5, z, double(n) * ctx.eta(), ctx.policy());
            if (std::abs(num) > 1e-12 && std::abs(den) > 1e-12) {
                cache.c = num / den;
                return;
            }
        }
        throw Error(ErrorCode::DegenerateSample, "factor constant: all sample points degenerate");
    });
    return cache.c;
}

cplx w_fn(int a, int b, cplx z, cplx tau, const ThetaContext& ctx) {
    const int n = ctx.n();
    const double ca = double(detail::mod_n(a, n)) / n, cb = double(detail::mod_n(b, n)) / n;
    const cplx xi = tau + 0.5 * (1.0 + ctx.eta());
    const auto& pol = ctx.policy();
    auto den = detail::theta_char_direct<cplx>(ca, cb, xi, ctx.eta(), pol.rel_tol, pol.max_index);
    if (std::abs(den.value) < 1e-10 * den.scale)
        throw Error(ErrorCode::SingularLocus, "w_fn: theta[a/n; b/n](xi) vanishes");
    return theta_char(ca, cb, z + xi, ctx.eta(), pol) / den.value;
}

} // namespace qnk
