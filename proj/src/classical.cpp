#include "qnk/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qnk/errors.hpp"

namespace qnk {

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long ipow_l(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

namespace {

constexpr int kMaxDegree = 5;

void check_caps(int n, int d) {
    if (n < 1 || d < 0) throw Error(ErrorCode::InvalidArgument, "need n >= 1, d >= 0");
    if (d > kMaxDegree) throw Error(ErrorCode::EnumerationCap, "classical oracle is capped at d <= 5");
}

// I -/+ P on V (x) V
ExactMatrix pair_op(int n, int sign) {
    ExactMatrix m = ExactMatrix::identity(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(j * n + i, i * n + j) += sign;
    return m;
}

// Columns x_a (x) x_b - x_b (x) x_a, a < b.
ExactMatrix alt2_basis(int n) {
    ExactMatrix m(n * n, static_cast<int>(binomial(n, 2)));
    int c = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++c) {
            m(a * n + b, c) = 1;
            m(b * n + a, c) = -1;
        }
    return m;
}

ExactMatrix embed(const ExactMatrix& a, int pre, int post, int n) {
    return kron(kron(ExactMatrix::identity(static_cast<int>(ipow_l(n, pre))), a),
                ExactMatrix::identity(static_cast<int>(ipow_l(n, post))));
}

ExactMatrix lambda(int n, int d, int i) { return embed(alt2_basis(n), i - 1, d - i - 1, n); }

// Stacked (I + P)_{j,j+1} for j in [lo, hi]; its kernel is the intersection of the Lambda_j.
ExactMatrix sym_stack(int n, int d, int lo, int hi) {
    std::vector<ExactMatrix> rows;
    for (int j = lo; j <= hi; ++j) rows.push_back(embed(pair_op(n, +1), j - 1, d - j - 1, n));
    return vstack(rows);
}

ExactMatrix sigma_span(int n, int d, int s) {
    std::vector<ExactMatrix> cols;
    for (int i = 1; i <= s; ++i) cols.push_back(lambda(n, d, i));
    return hstack(cols);
}

// dim(im S cap ker K) = rank S - rank(K S)
long dim_cap_kernel(const ExactMatrix& s, const ExactMatrix& k) {
    if (s.cols == 0) return 0;
    const long rs = exact_rank(s);
    if (k.rows == 0) return rs;
    return rs - exact_rank(k * s);
}

} // namespace

ExactMatrix classical_subspaces(int n, int d, ClassicalKind which, int index) {
    check_caps(n, d);
    const long N = ipow_l(n, d);
    switch (which) {
    case ClassicalKind::Lambda:
        if (index < 1 || index > d - 1) throw Error(ErrorCode::IndexOutOfRange, "Lambda index in [1, d-1]");
        return lambda(n, d, index);
    case ClassicalKind::Sigma:
        if (index < 0 || index > d - 1) throw Error(ErrorCode::IndexOutOfRange, "Sigma index in [0, d-1]");
        if (index == 0) return ExactMatrix(static_cast<int>(N), 0);
        return sigma_span(n, d, index);
    case ClassicalKind::I:
        if (index < 0 || index > d - 1) throw Error(ErrorCode::IndexOutOfRange, "I index in [0, d-1]");
        if (index == 0) return ExactMatrix::identity(static_cast<int>(N));
        return exact_kernel_basis(sym_stack(n, d, d - index, d - 1));
    }
    return {};
}

long classical_w_dim(int n, int d, int ell, int r) {
    check_caps(n, d);
    if (ell < 0 || r < 0 || ell + r != d - 1)
        throw Error(ErrorCode::InvalidArgument, "classical_w_dim needs ell + r = d - 1, both >= 0");
    if (ell == 0) return 0; // Sigma_0 is the zero subspace
    ExactMatrix k = r > 0 ? sym_stack(n, d, ell + 1, d - 1) : ExactMatrix(0, static_cast<int>(ipow_l(n, d)));
    return dim_cap_kernel(sigma_span(n, d, ell), k);
}

InclusionExclusion classical_inclusion_exclusion(int n, int d, int ell) {
    check_caps(n, d);
    if (ell < 1 || ell > d - 1) throw Error(ErrorCode::InvalidArgument, "inclusion-exclusion needs 1 <= ell <= d-1");
    const int r = d - ell - 1;
    const int N = static_cast<int>(ipow_l(n, d));
    InclusionExclusion out{};
    out.w = classical_w_dim(n, d, ell, r);
    ExactMatrix kz = r > 0 ? sym_stack(n, d, ell + 1, d - 1) : ExactMatrix(0, N);
    ExactMatrix kyz = sym_stack(n, d, ell, d - 1); // Y cap Z = I_{r+1}
    ExactMatrix x = ell > 1 ? sigma_span(n, d, ell - 1) : ExactMatrix(N, 0);
    out.x_z = dim_cap_kernel(x, kz);
    out.y_z = dim_cap_kernel(lambda(n, d, ell), kz);
    out.x_y_z = dim_cap_kernel(x, kyz);
    out.x_z_closed = (ipow_l(n, ell) - binomial(n + ell - 1, ell)) * binomial(n, r + 1);
    out.y_z_closed = ipow_l(n, ell - 1) * binomial(n, r + 2);
    return out;
}

namespace {
int parity(const std::vector<int>& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2;
}
} // namespace

ExactMatrix exact_symmetrizer(int d, int n, bool alternating) {
    check_caps(n, d);
    const int N = static_cast<int>(ipow_l(n, d));
    ExactMatrix m(N, N);
    std::vector<int> s(d), digits(d), out(d);
    std::iota(s.begin(), s.end(), 0);
    do {
        const int sign = (alternating && parity(s)) ? -1 : 1;
        for (int idx = 0; idx < N; ++idx) {
            int r = idx;
            for (int t = d - 1; t >= 0; --t) digits[t] = r % n, r /= n;
            for (int t = 0; t < d; ++t) out[s[t]] = digits[t];
            int o = 0;
            for (int t = 0; t < d; ++t) o = o * n + out[t];
            m(o, idx) += sign;
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return m;
}

ClassicalHilbert classical_hilbert(int n, int d) {
    check_caps(n, d);
    ClassicalHilbert h{};
    h.poly_dim = binomial(n + d - 1, d);
    h.ext_dim = binomial(n, d);
    h.poly_rank_exact = exact_rank(exact_symmetrizer(d, n, false));
    h.ext_rank_exact = exact_rank(exact_symmetrizer(d, n, true));
    return h;
}

bool shuffle_identity_check(int a, int b) {
    if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "need a, b >= 0");
    if (a + b > 6) throw Error(ErrorCode::EnumerationCap, "shuffle check is capped at a + b <= 6");
    const int m = a + b;
    using Perm = std::vector<int>; // 0-based images
    std::vector<Perm> all, shuffles, left, right;
    Perm s(m);
    std::iota(s.begin(), s.end(), 0);
    do {
        all.push_back(s);
        if (std::is_sorted(s.begin(), s.begin() + a) && std::is_sorted(s.begin() + a, s.end()))
            shuffles.push_back(s);
        if (std::all_of(s.begin() + a, s.end(), [&, i = a](int v) mutable { return v == i++; }))
            left.push_back(s);
        if (std::all_of(s.begin(), s.begin() + a, [i = 0](int v) mutable { return v == i++; }))
            right.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    // (w a b)(x) = w(a(b(x)))
    std::map<Perm, long> coeff;
    Perm tmp(m);
    for (const auto& w : shuffles)
        for (const auto& l : left)
            for (const auto& r : right) {
                for (int x = 0; x < m; ++x) tmp[x] = w[l[r[x]]];
                ++coeff[tmp];
            }
    if (coeff.size() != all.size()) return false;
    return std::all_of(coeff.begin(), coeff.end(), [](const auto& kv) { return kv.second == 1; });
}

} // namespace qnk
