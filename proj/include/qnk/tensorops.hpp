#pragma once

#include <cmath>

#include <vector>

#include "qnk/rmatrix.hpp"

namespace qnk {

// Dense operator on V^(x)d; basis x_{i1} (x) ... (x) x_{id} -> sum_t i_t n^(d-t).
struct OperatorVd {
    int n = 0;
    int d = 0;
    // The operator is exp(log_scale) * matrix. Chains of R-factors are built from
    // unit-norm factors because the raw products leave double range quickly.
    CMatrix matrix;
    double log_scale = 0.0;
    // product of the norms of the factors of matrix (1 for normalised chains): the
    // yardstick for deciding that singular values are numerically zero
    double ref_scale = 1.0;

    CMatrix value() const { return matrix * std::exp(log_scale); }
    static OperatorVd identity(int n, int d);
};

// 1-based positions, as in A_{i,i+1} and A_i.
CMatrix embed_pair(const CMatrix& a, int i, int d, int n);
CMatrix embed_single(const CMatrix& a, int i, int d, int n);
CMatrix embed_left(const CMatrix& a, int d, int n);  // A^L = A (x) I
CMatrix embed_right(const CMatrix& a, int d, int n); // A^R = I (x) A

// sigma[p] = q sends tensor factor p to slot q (0-based).
using Permutation = std::vector<int>;
CMatrix perm_op(const Permutation& sigma, int n);
CMatrix symmetrizer(int d, int n);
CMatrix antisymmetrizer(int d, int n);

enum class ChainKind {
    FwdUp,   // S_{i->j}(t_i..t_{j-1})
    FwdDown, // S_{j->i}, arguments listed as (t_{j-1}, ..., t_i)
    RevUp,   // S^rev_{i->j}(t_i..t_{j-1})
    RevDown, // S^rev_{j->i}, arguments listed as (t_{j-1}, ..., t_i)
};

struct ChainArgs {
    ChainKind kind;
    int i, j; // 1 <= i <= j <= d
    std::vector<cplx> t;
};

// One R(arg) factor on positions (pos, pos+1), 1-based.
struct Factor {
    int pos;
    cplx arg;
};

std::vector<Factor> chain_factors(const ChainArgs& args);

// Ordered product F_1 F_2 ... F_m of embedded R factors.
OperatorVd factor_product(const AlgebraParams& p, int d, const std::vector<Factor>& factors);

OperatorVd s_chain(const AlgebraParams& p, int d, const ChainArgs& args);

// T_d(z_1..z_{d-1}) = S_{2->1}(z_1) S_{3->1}(z_1,z_2) ... S_{d->1}(z_1..z_{d-1})
std::vector<Factor> t_d_factors(int d, const std::vector<cplx>& z);
OperatorVd t_d(const AlgebraParams& p, int d, const std::vector<cplx>& z);
OperatorVd f_d(const AlgebraParams& p, cplx z, int d);

// M_{a,b}(z; x; y) via rows of S^rev chains; m_ab_decr assembles it by columns.
std::vector<Factor> m_ab_factors(int a, int b, cplx z, const std::vector<cplx>& x,
                                 const std::vector<cplx>& y, bool by_columns = false);
OperatorVd m_ab(const AlgebraParams& p, int a, int b, cplx z, const std::vector<cplx>& x,
                const std::vector<cplx>& y);
OperatorVd m_ab_decr(const AlgebraParams& p, int a, int b, cplx z, const std::vector<cplx>& x,
                     const std::vector<cplx>& y);

// V^(x)pre (x) S (x) V^(x)post
Subspace embed_subspace(const Subspace& s, int pre, int post, int n);

// W_i = V^(i-1) (x) rel (x) V^(d-i-1), i = 1..d-1, rel = im R_tau(tau).
std::vector<Subspace> relation_components(const AlgebraParams& p, int d);
Subspace relation_space(const AlgebraParams& p, int d);

} // namespace qnk
