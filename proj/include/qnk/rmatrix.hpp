#pragma once

#include <optional>

#include "qnk/extended.hpp"
#include "qnk/linalg.hpp"
#include "qnk/theta.hpp"

namespace qnk {

inline const cplx kDefaultEta{0.31, 1.37};
inline cplx default_tau(cplx eta) { return 0.1234 + 0.4321 * eta; }

// zeta = a/n + (b/n) eta
struct HalfPeriodPoint {
    int a = 0, b = 0;
    cplx value(int n, cplx eta) const { return (double(a) + double(b) * eta) / double(n); }
};

struct AlgebraParams {
    int n;
    int k;
    int kprime; // k k' = 1 mod n, 1 <= k' < n
    cplx tau;
    ThetaContext theta;
    RankPolicy ranks;

    AlgebraParams(int n, int k, cplx tau, ThetaContext theta, RankPolicy ranks = {});
    static AlgebraParams make(int n, int k, cplx eta = kDefaultEta,
                              std::optional<cplx> tau = std::nullopt, RankPolicy ranks = {},
                              Precision precision = Precision::Double);

    cplx eta() const { return theta.eta(); }
    int dim2() const { return n * n; }
    AlgebraParams with_tau(cplx t) const;
    AlgebraParams with_k(int k2) const;
};

// Nearest point of (1/n)Lambda to x when it lies within tol, else nullopt.
std::optional<HalfPeriodPoint> nearest_torsion(cplx x, int n, cplx eta, double tol = 1e-8);
inline bool on_torsion(const AlgebraParams& p, double tol = 1e-8) {
    return nearest_torsion(p.tau, p.n, p.eta(), tol).has_value();
}

struct BasisOps {
    CMatrix S, T, N; // on V
    CMatrix P;       // swap on V (x) V
};

BasisOps basis_ops(int n);

CMatrix matrix_power(const CMatrix& m, int e); // negative e inverts (unitary inputs)

// R_tau(z) on V (x) V; basis x_i (x) x_j -> i*n + j, column = input.
CMatrix r_matrix(const AlgebraParams& p, cplx z);
ExtMatrix r_matrix_ext(const AlgebraParams& p, const ext_complex& z);

// sym_m(v (x) v') = v (x) v' - m v' (x) v
CMatrix sym_op(int m, int n);

// R_{+1}(zeta) / R_{-1}(zeta): limits of R_tau(+-tau + zeta) as tau -> 0.
CMatrix r_plus_limit(const AlgebraParams& p, HalfPeriodPoint zeta, int sign);

cplx b_fn(const AlgebraParams& p, cplx z);
cplx f_fn(const AlgebraParams& p, cplx z, HalfPeriodPoint zeta);
cplx f_fn(int n, cplx eta, cplx z, HalfPeriodPoint zeta, cplx tau);

// C = T^b S^{k a}
CMatrix shift_conjugator(const AlgebraParams& p, HalfPeriodPoint zeta);

CMatrix belavin_s(const AlgebraParams& p, cplx z);
CMatrix belavin_sk(const AlgebraParams& p, cplx z);

cplx det_closed_form(const AlgebraParams& p, cplx z);
// log of det_closed_form, for sizes where the product leaves double range
cplx log_det_closed_form(const AlgebraParams& p, cplx z);
ext_complex det_closed_form_ext(const AlgebraParams& p, const ext_complex& z);

// prod_alpha theta_alpha(-z + tau) / theta_alpha(tau); R = this * R^Od.
cplx odesskii_prefactor(const AlgebraParams& p, cplx z);
cplx odesskii_det_closed_form(const AlgebraParams& p, cplx z);

double dual_transpose_check(const AlgebraParams& p, cplx z);

// R_tau(tau), or R_+(tau) when tau is a torsion point; its image is rel.
CMatrix relation_operator(const AlgebraParams& p);

} // namespace qnk
