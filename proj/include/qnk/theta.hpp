#pragma once

#include <complex>
#include <memory>

#include "qnk/errors.hpp"

namespace qnk {

using cplx = std::complex<double>;

enum class Precision { Double, Extended };

struct LatticeParams {
    cplx eta;
    explicit LatticeParams(cplx eta_);
};

struct SeriesPolicy {
    double rel_tol = 1e-15;
    int max_index = 200;
    void validate() const;
};

// n, the lattice, the truncation policy and a write-once cache for the
// factor constant c. Copies share the cache.
class ThetaContext {
public:
    ThetaContext(int n, LatticeParams lattice, SeriesPolicy policy = {},
                 Precision precision = Precision::Double);

    int n() const { return n_; }
    cplx eta() const { return lattice_.eta; }
    const SeriesPolicy& policy() const { return policy_; }
    Precision precision() const { return precision_; }

    struct Cache;

private:
    friend cplx factor_constant(const ThetaContext&);
    int n_;
    LatticeParams lattice_;
    SeriesPolicy policy_;
    Precision precision_;
    std::shared_ptr<Cache> cache_;
};

cplx e_fn(cplx z);

// Order-1 theta: sum_m (-1)^m e(mz + m(m-1)eta/2).
cplx theta1(cplx z, const ThetaContext& ctx);

// theta_alpha(z), alpha taken mod n.
cplx theta_alpha(int alpha, cplx z, const ThetaContext& ctx);

// theta with characteristics [a; b](z | eta).
cplx theta_char(double a, double b, cplx z, cplx eta, const SeriesPolicy& policy = {});

// Relative residual of the quasi-periodicity law under z -> z + s*eta + t.
// Both sides are summed directly, without argument reduction.
double theta_char_shift_check(double a, double b, int s, int t, cplx z, cplx eta,
                              const SeriesPolicy& policy = {});

cplx factor_constant(const ThetaContext& ctx);

// Belavin weight w_{(a,b)}(z); xi = tau + (1+eta)/2.
cplx w_fn(int a, int b, cplx z, cplx tau, const ThetaContext& ctx);

namespace detail {
// Unreduced series, exposed for tests of the reduction step.
cplx theta1_direct(cplx z, cplx eta, const SeriesPolicy& policy);
cplx theta_char_direct(double a, double b, cplx z, cplx eta, const SeriesPolicy& policy);
} // namespace detail

} // namespace qnk
