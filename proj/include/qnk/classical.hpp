#pragma once

// Exact tau = 0 reference values: Lambda_{i,i+1} = V^(i-1) (x) Alt^2 V (x) V^(d-i-1),
// Sigma_s = sum_{i<=s} Lambda_{i,i+1}, I_t = intersection over the last t of them.

#include <vector>

#include "qnk/exact.hpp"

namespace qnk {

enum class ClassicalKind { Lambda, Sigma, I };

// Integer spanning set (columns) for Lambda_{index,index+1}, Sigma_index or I_index.
ExactMatrix classical_subspaces(int n, int d, ClassicalKind which, int index);

// dim(Sigma_ell cap I_r), ell + r = d - 1.
long classical_w_dim(int n, int d, int ell, int r);

struct InclusionExclusion {
    long w;      // dim W^{ell+1,r+1}
    long x_z;    // dim(X cap Z), X = Sigma_{ell-1}, Z = I_r
    long y_z;    // dim(Y cap Z), Y = Lambda_{ell,ell+1}
    long x_y_z;  // dim(X cap Y cap Z)
    long x_z_closed, y_z_closed; // (n^ell - C(n+ell-1,ell)) C(n,r+1),  n^(ell-1) C(n,r+2)
};

// Requires 1 <= ell <= d-1.
InclusionExclusion classical_inclusion_exclusion(int n, int d, int ell);

struct ClassicalHilbert {
    long poly_dim; // C(n+d-1, d)
    long ext_dim;  // C(n, d)
    long poly_rank_exact; // exact rank of the integer symmetrizer
    long ext_rank_exact;  // exact rank of the integer antisymmetrizer
};

ClassicalHilbert classical_hilbert(int n, int d);

long binomial(long n, long k);
long ipow_l(long b, int e);

// Integer (anti)symmetrizer on (Z^n)^(x)d.
ExactMatrix exact_symmetrizer(int d, int n, bool alternating);

// (sum of shuffles)(sum over S_a x 1)(sum over 1 x S_b) == sum over S_{a+b}
// in the integer group algebra; a + b <= 6.
bool shuffle_identity_check(int a, int b);

} // namespace qnk
