#pragma once

#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "qnk/errors.hpp"
#include "qnk/theta.hpp"

namespace qnk {

using CMatrix = Eigen::MatrixXcd;

struct RankPolicy {
    double rel_threshold = 1e-9;
    double min_gap = 1e4;
    void validate() const;
};

struct RankInfo {
    int rank = 0;
    double gap = std::numeric_limits<double>::infinity();
    double cut = 0; // absolute threshold used
    Eigen::VectorXd sigma;
    bool ambiguous(const RankPolicy& p) const { return gap < p.min_gap; }
};

class AmbiguousRankError : public Error {
public:
    explicit AmbiguousRankError(RankInfo info)
        : Error(ErrorCode::AmbiguousRank,
                "singular-value gap " + std::to_string(info.gap) + " below min_gap at rank " +
                    std::to_string(info.rank)),
          info_(std::move(info)) {}
    const RankInfo& info() const { return info_; }

private:
    RankInfo info_;
};

// Thin SVD through LAPACK zgesvd (Jacobi fallback): m = U diag(sigma) V^*.
struct Svd {
    Eigen::VectorXd sigma; // descending
    CMatrix U, V;          // empty unless vectors were requested
};
Svd svd(const CMatrix& m, bool want_vectors = true);

// Rank counts singular values above rel_threshold * max(sigma_max, ref_scale).
// ref_scale lets a caller certify a numerically zero operator against the
// size of its factors. Throws AmbiguousRankError when the gap is too small.
RankInfo svd_rank(const CMatrix& m, const RankPolicy& policy = {}, double ref_scale = 0);
RankInfo svd_rank_unchecked(const CMatrix& m, const RankPolicy& policy = {}, double ref_scale = 0);

struct Subspace {
    int ambient_dim = 0;
    CMatrix basis; // orthonormal columns
    double tol_used = 0;

    int dim() const { return static_cast<int>(basis.cols()); }
    static Subspace zero(int ambient);
    static Subspace ambient(int ambient);
    static Subspace from_orthonormal(CMatrix basis, double tol = 0);
};

Subspace kernel(const CMatrix& m, const RankPolicy& policy = {}, double ref_scale = 0);
Subspace image(const CMatrix& m, const RankPolicy& policy = {}, double ref_scale = 0);

Subspace subspace_sum(const std::vector<Subspace>& parts, const RankPolicy& policy = {});
Subspace subspace_intersect(const std::vector<Subspace>& parts, const RankPolicy& policy = {});

struct SubspaceComparison {
    bool equal = false;
    double max_principal_angle = 0;
};

SubspaceComparison subspace_equal(const Subspace& a, const Subspace& b, double tol = 1e-6);

// Image of a subspace under an operator (no orthonormality assumed of op).
Subspace apply(const CMatrix& op, const Subspace& s, const RankPolicy& policy = {});

// ||a - b||_F / max(||a||_F, ||b||_F), 0 when both vanish.
double rel_residual(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);

// log det via partial-pivot LU; the imaginary part is only meaningful mod 2 pi.
// -inf real part for a singular matrix.
cplx log_determinant(const CMatrix& m);

} // namespace qnk
