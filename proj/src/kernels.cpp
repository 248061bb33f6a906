#include "qnk/kernels.hpp"

#include <omp.h>

namespace qnk::kernels {

long ipow(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

namespace {
void check_shape(const CMatrix& a, int pos, int width, int n, int d) {
    if (pos < 0 || width < 0 || pos + width > d)
        throw Error(ErrorCode::IndexOutOfRange, "block does not fit in d tensor factors");
    if (a.rows() != ipow(n, width) || a.cols() != a.rows())
        throw Error(ErrorCode::InvalidArgument, "operator size does not match n^width");
}
} // namespace

CMatrix embed_block(const CMatrix& a, int pos, int width, int n, int d) {
    check_shape(a, pos, width, n, d);
    const long pre = ipow(n, pos), post = ipow(n, d - pos - width);
    return kron(kron(CMatrix::Identity(pre, pre), a), CMatrix::Identity(post, post));
}

void apply_left_inplace(const CMatrix& a, int pos, int width, int n, int d, CMatrix& m) {
    check_shape(a, pos, width, n, d);
    const long blk = a.rows(), pre = ipow(n, pos), post = ipow(n, d - pos - width);
    if (m.rows() != pre * blk * post) throw Error(ErrorCode::InvalidArgument, "operand row count mismatch");
    const CMatrix at = a.transpose();
    const long cols = m.cols();
#pragma omp parallel
    {
        CMatrix tmp(post, blk);
#pragma omp for schedule(static)
        for (long c = 0; c < cols; ++c) {
            cplx* col = m.col(c).data();
            for (long p = 0; p < pre; ++p) {
                // rows (p, i, q) of this column form a post x blk column-major block
                Eigen::Map<CMatrix> x(col + p * blk * post, post, blk);
                tmp.noalias() = x * at;
                x = tmp;
            }
        }
    }
}

CMatrix apply_left(const CMatrix& a, int pos, int width, int n, int d, const CMatrix& m) {
    CMatrix out = m;
    apply_left_inplace(a, pos, width, n, d, out);
    return out;
}

CMatrix apply_left_serial(const CMatrix& a, int pos, int width, int n, int d, const CMatrix& m) {
    return embed_block(a, pos, width, n, d) * m;
}

CMatrix apply_right(const CMatrix& m, const CMatrix& a, int pos, int width, int n, int d) {
    CMatrix t = m.transpose();
    apply_left_inplace(a.transpose(), pos, width, n, d, t);
    return t.transpose();
}

CMatrix apply_right_serial(const CMatrix& m, const CMatrix& a, int pos, int width, int n, int d) {
    return m * embed_block(a, pos, width, n, d);
}

} // namespace qnk::kernels
