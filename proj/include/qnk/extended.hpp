#pragma once

// Extended-precision (50 significant digits) evaluation of theta_alpha,
// R_tau(z) and determinants, for checks where det R(z) is ill-conditioned.

#include <vector>

#include "qnk/detail/series.hpp"
#include "qnk/theta.hpp"

namespace qnk {

using ext_complex = detail::ext_complex;
using ext_real = detail::ext_real;

struct ExtMatrix {
    int rows = 0, cols = 0;
    std::vector<ext_complex> a; // row-major
    ext_complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const ext_complex& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

ext_complex to_ext(cplx z);
cplx to_double(const ext_complex& z);

ext_complex theta1_ext(const ext_complex& z, const ThetaContext& ctx);
ext_complex theta_alpha_ext(int alpha, const ext_complex& z, const ThetaContext& ctx);

// Determinant by partial-pivot LU.
ext_complex determinant_ext(ExtMatrix m);

} // namespace qnk
