#include "qnk/extended.hpp"

#include <algorithm>
#include <utility>

namespace qnk {

namespace {
ext_real ext_tol(const ThetaContext& ctx) {
    return std::min(ext_real(ctx.policy().rel_tol), ext_real("1e-48"));
}
int ext_max_index(const ThetaContext& ctx) { return std::max(ctx.policy().max_index, 400); }
} // namespace

ext_complex to_ext(cplx z) { return ext_complex(ext_real(z.real()), ext_real(z.imag())); }

cplx to_double(const ext_complex& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

ext_complex theta1_ext(const ext_complex& z, const ThetaContext& ctx) {
    return detail::theta1_reduced<ext_complex>(z, to_ext(ctx.eta()), ext_tol(ctx), ext_max_index(ctx));
}

ext_complex theta_alpha_ext(int alpha, const ext_complex& z, const ThetaContext& ctx) {
    return detail::theta_alpha_t<ext_complex>(alpha, z, to_ext(ctx.eta()), ctx.n(), ext_tol(ctx),
                                              ext_max_index(ctx));
}

ext_complex determinant_ext(ExtMatrix m) {
    if (m.rows != m.cols) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    const int n = m.rows;
    ext_complex det(1);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        ext_real best = abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            ext_real v = abs(m(i, k));
            if (v > best) best = v, piv = i;
        }
        if (best == 0) return ext_complex(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            ext_complex f = m(i, k) / m(k, k);
            if (f == ext_complex(0)) continue;
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

} // namespace qnk
