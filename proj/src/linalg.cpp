#include "qnk/linalg.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include <lapacke.h>

namespace qnk {

void RankPolicy::validate() const {
    if (!(rel_threshold > 0 && rel_threshold < 1))
        throw Error(ErrorCode::InvalidArgument, "rel_threshold must lie in (0,1)");
    if (!(min_gap > 1)) throw Error(ErrorCode::InvalidArgument, "min_gap must exceed 1");
}

Svd svd(const CMatrix& m, bool want_vectors) {
    if (!m.allFinite()) throw Error(ErrorCode::InvalidArgument, "SVD input has non-finite entries");
    Svd out;
    const lapack_int rows = static_cast<lapack_int>(m.rows()), cols = static_cast<lapack_int>(m.cols());
    const lapack_int k = std::min(rows, cols);
    out.sigma.resize(k);
    if (k == 0) {
        out.U.resize(rows, 0);
        out.V.resize(cols, 0);
        return out;
    }
    // QR-iteration zgesvd, not divide-and-conquer: both Eigen's BDCSVD and OpenBLAS
    // zgesdd return non-orthogonal factors on stacked bases with many equal
    // singular values (reconstruction error O(1) on 256 x 480 inputs).
    CMatrix a = m; // column-major copy, overwritten by LAPACK
    const char job = want_vectors ? 'S' : 'N';
    CMatrix u, vt;
    if (want_vectors) u.resize(rows, k), vt.resize(k, cols);
    auto* ap = reinterpret_cast<lapack_complex_double*>(a.data());
    auto* up = want_vectors ? reinterpret_cast<lapack_complex_double*>(u.data()) : nullptr;
    auto* vp = want_vectors ? reinterpret_cast<lapack_complex_double*>(vt.data()) : nullptr;
    Eigen::VectorXd superb(std::max<lapack_int>(k - 1, 1));
    const lapack_int info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, job, job, rows, cols, ap, rows, out.sigma.data(), up,
                                           std::max<lapack_int>(rows, 1), vp, std::max<lapack_int>(k, 1),
                                           superb.data());
    if (info != 0) {
        // one-sided Jacobi: slow but unconditionally convergent
        const unsigned opts = want_vectors ? (Eigen::ComputeThinU | Eigen::ComputeThinV) : 0u;
        Eigen::JacobiSVD<CMatrix> j(m, opts);
        out.sigma = j.singularValues();
        if (want_vectors) {
            out.U = j.matrixU();
            out.V = j.matrixV();
        }
        return out;
    }
    if (want_vectors) {
        out.U = std::move(u);
        out.V = vt.adjoint();
    }
    return out;
}

namespace {

struct Decomp {
    RankInfo info;
    Svd svd;
};

Decomp decompose(const CMatrix& m, const RankPolicy& policy, double ref_scale, bool want_vectors) {
    Decomp d;
    const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
    if (scale == 0) {
        d.info.rank = 0;
        d.info.sigma = Eigen::VectorXd::Zero(std::min(m.rows(), m.cols()));
        return d;
    }
    // max-abs normalisation keeps F_d-sized entries in range
    d.svd = svd(m / scale, want_vectors);
    Eigen::VectorXd s = d.svd.sigma * scale;
    const double ref = std::max(s.size() ? s(0) : 0.0, ref_scale);
    const double cut = policy.rel_threshold * ref;
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    double gap = std::numeric_limits<double>::infinity();
    if (r < s.size() && s(r) > 0) gap = (r > 0 ? s(r - 1) : ref) / s(r);
    d.info.rank = r;
    d.info.gap = gap;
    d.info.cut = cut;
    d.info.sigma = std::move(s);
    return d;
}

} // namespace

RankInfo svd_rank_unchecked(const CMatrix& m, const RankPolicy& policy, double ref_scale) {
    return decompose(m, policy, ref_scale, false).info;
}

RankInfo svd_rank(const CMatrix& m, const RankPolicy& policy, double ref_scale) {
    RankInfo info = svd_rank_unchecked(m, policy, ref_scale);
    if (info.ambiguous(policy)) throw AmbiguousRankError(info);
    return info;
}

Subspace Subspace::zero(int ambient) { return {ambient, CMatrix(ambient, 0), 0}; }

Subspace Subspace::ambient(int ambient) {
    return {ambient, CMatrix::Identity(ambient, ambient), 0};
}

Subspace Subspace::from_orthonormal(CMatrix basis, double tol) {
    const int n = static_cast<int>(basis.rows());
    return {n, std::move(basis), tol};
}

Subspace kernel(const CMatrix& m, const RankPolicy& policy, double ref_scale) {
    const int cols = static_cast<int>(m.cols());
    if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0) return Subspace::ambient(cols);
    Decomp d = decompose(m, policy, ref_scale, true);
    if (d.info.ambiguous(policy)) throw AmbiguousRankError(d.info);
    // The null block of V is unreliable when singular values are exactly
    // zero; take the complement of the row space instead.
    const int r = d.info.rank;
    if (r == 0) return Subspace::ambient(cols);
    CMatrix row = d.svd.V.leftCols(r);
    Eigen::HouseholderQR<CMatrix> qr(row);
    CMatrix q = qr.householderQ() * CMatrix::Identity(cols, cols);
    return {cols, q.rightCols(cols - r), d.info.cut};
}

Subspace image(const CMatrix& m, const RankPolicy& policy, double ref_scale) {
    const int rows = static_cast<int>(m.rows());
    if (m.size() == 0 || m.cwiseAbs().maxCoeff() == 0) return Subspace::zero(rows);
    Decomp d = decompose(m, policy, ref_scale, true);
    if (d.info.ambiguous(policy)) throw AmbiguousRankError(d.info);
    return {rows, d.svd.U.leftCols(d.info.rank), d.info.cut};
}

Subspace subspace_sum(const std::vector<Subspace>& parts, const RankPolicy& policy) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "subspace_sum of empty list");
    const int amb = parts.front().ambient_dim;
    Eigen::Index total = 0;
    for (const auto& p : parts) {
        if (p.ambient_dim != amb) throw Error(ErrorCode::InvalidArgument, "ambient dimension mismatch");
        total += p.dim();
    }
    if (total == 0) return Subspace::zero(amb);
    CMatrix cat(amb, total);
    Eigen::Index c = 0;
    for (const auto& p : parts) {
        cat.middleCols(c, p.dim()) = p.basis;
        c += p.dim();
    }
    return image(cat, policy);
}

Subspace subspace_intersect(const std::vector<Subspace>& parts, const RankPolicy& policy) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "subspace_intersect of empty list");
    const int amb = parts.front().ambient_dim;
    std::vector<const Subspace*> proper;
    for (const auto& p : parts) {
        if (p.ambient_dim != amb) throw Error(ErrorCode::InvalidArgument, "ambient dimension mismatch");
        if (p.dim() == 0) return Subspace::zero(amb);
        if (p.dim() < amb) proper.push_back(&p);
    }
    if (proper.empty()) return Subspace::ambient(amb);
    // kernel of the stacked complementary projectors I - Q Q^*
    CMatrix stack(amb * static_cast<Eigen::Index>(proper.size()), amb);
    for (size_t i = 0; i < proper.size(); ++i) {
        const CMatrix& q = proper[i]->basis;
        stack.middleRows(static_cast<Eigen::Index>(i) * amb, amb) =
            CMatrix::Identity(amb, amb) - q * q.adjoint();
    }
    return kernel(stack, policy, 1.0);
}

SubspaceComparison subspace_equal(const Subspace& a, const Subspace& b, double tol) {
    if (a.ambient_dim != b.ambient_dim) throw Error(ErrorCode::InvalidArgument, "ambient dimension mismatch");
    if (a.dim() != b.dim()) return {false, std::numbers::pi / 2};
    if (a.dim() == 0) return {true, 0.0};
    // sine of the largest principal angle = ||(I - P_a) Q_b||_2
    CMatrix resid = b.basis - a.basis * (a.basis.adjoint() * b.basis);
    const Eigen::VectorXd sv = svd(resid, false).sigma;
    double s = std::min(1.0, sv.size() ? sv(0) : 0.0);
    double angle = std::asin(s);
    return {angle < tol, angle};
}

Subspace apply(const CMatrix& op, const Subspace& s, const RankPolicy& policy) {
    if (s.dim() == 0) return Subspace::zero(static_cast<int>(op.rows()));
    return image(op * s.basis, policy, op.norm());
}

double rel_residual(const CMatrix& a, const CMatrix& b) {
    const double den = std::max(a.norm(), b.norm());
    return den == 0 ? 0.0 : (a - b).norm() / den;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

cplx log_determinant(const CMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    if (m.rows() == 0) return 0.0;
    const Eigen::PartialPivLU<CMatrix> lu(m);
    const CMatrix& u = lu.matrixLU();
    cplx acc = lu.permutationP().determinant() < 0 ? cplx(0, std::numbers::pi) : cplx(0);
    for (Eigen::Index i = 0; i < u.rows(); ++i) acc += std::log(u(i, i));
    return {acc.real(), std::remainder(acc.imag(), 2 * std::numbers::pi)};
}

} // namespace qnk
