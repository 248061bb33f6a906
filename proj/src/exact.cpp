#include "qnk/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "qnk/errors.hpp"

namespace qnk {

using Rational = boost::multiprecision::cpp_rational;

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols != y.rows) throw Error(ErrorCode::InvalidArgument, "exact product shape mismatch");
    ExactMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) out(i, j) += x(i, k) * y(k, j);
        }
    return out;
}

ExactMatrix hstack(const std::vector<ExactMatrix>& parts) {
    if (parts.empty()) return {};
    int rows = parts.front().rows, cols = 0;
    for (const auto& p : parts) {
        if (p.rows != rows) throw Error(ErrorCode::InvalidArgument, "hstack row mismatch");
        cols += p.cols;
    }
    ExactMatrix out(rows, cols);
    int c0 = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < p.cols; ++j) out(i, c0 + j) = p(i, j);
        c0 += p.cols;
    }
    return out;
}

ExactMatrix vstack(const std::vector<ExactMatrix>& parts) {
    if (parts.empty()) return {};
    int cols = parts.front().cols, rows = 0;
    for (const auto& p : parts) {
        if (p.cols != cols) throw Error(ErrorCode::InvalidArgument, "vstack column mismatch");
        rows += p.rows;
    }
    ExactMatrix out(rows, cols);
    int r0 = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows; ++i)
            for (int j = 0; j < cols; ++j) out(r0 + i, j) = p(i, j);
        r0 += p.rows;
    }
    return out;
}

ExactMatrix kron(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) {
            if (x(i, j) == 0) continue;
            for (int p = 0; p < y.rows; ++p)
                for (int q = 0; q < y.cols; ++q) out(i * y.rows + p, j * y.cols + q) = x(i, j) * y(p, q);
        }
    return out;
}

int exact_rank(ExactMatrix m) {
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = rank;
        while (piv < m.rows && m(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
        const BigInt& p = m(rank, col);
        for (int i = rank + 1; i < m.rows; ++i) {
            // every update is an exact division by the previous pivot
            for (int j = col + 1; j < m.cols; ++j) m(i, j) = (m(i, j) * p - m(i, col) * m(rank, j)) / prev;
            m(i, col) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

ExactMatrix exact_kernel_basis(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[i][j] = Rational(m(i, j));
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = r;
        while (piv < m.rows && a[piv][col] == 0) ++piv;
        if (piv == m.rows) continue;
        std::swap(a[piv], a[r]);
        Rational inv = 1 / a[r][col];
        for (int j = col; j < m.cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (int j = col; j < m.cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    ExactMatrix out(m.cols, m.cols - r);
    int k = 0;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[free] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][free];
        BigInt l = 1;
        for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        for (int j = 0; j < m.cols; ++j) out(j, k) = boost::multiprecision::numerator(Rational(v[j] * l));
        ++k;
    }
    return out;
}

} // namespace qnk
