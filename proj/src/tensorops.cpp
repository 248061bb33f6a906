#include "qnk/tensorops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qnk/kernels.hpp"

namespace qnk {

using kernels::ipow;

OperatorVd OperatorVd::identity(int n, int d) {
    const long N = ipow(n, d);
    return {n, d, CMatrix::Identity(N, N), 0.0, 1.0};
}

CMatrix embed_pair(const CMatrix& a, int i, int d, int n) {
    if (i < 1 || i > d - 1) throw Error(ErrorCode::IndexOutOfRange, "embed_pair: need 1 <= i <= d-1");
    return kernels::embed_block(a, i - 1, 2, n, d);
}

CMatrix embed_single(const CMatrix& a, int i, int d, int n) {
    if (i < 1 || i > d) throw Error(ErrorCode::IndexOutOfRange, "embed_single: need 1 <= i <= d");
    return kernels::embed_block(a, i - 1, 1, n, d);
}

namespace {
int width_of(const CMatrix& a, int n) {
    int w = 0;
    long s = 1;
    while (s < a.rows()) s *= n, ++w;
    if (s != a.rows()) throw Error(ErrorCode::InvalidArgument, "operator size is not a power of n");
    return w;
}
} // namespace

CMatrix embed_left(const CMatrix& a, int d, int n) {
    return kernels::embed_block(a, 0, width_of(a, n), n, d);
}

CMatrix embed_right(const CMatrix& a, int d, int n) {
    const int w = width_of(a, n);
    return kernels::embed_block(a, d - w, w, n, d);
}

CMatrix perm_op(const Permutation& sigma, int n) {
    const int d = static_cast<int>(sigma.size());
    const long N = ipow(n, d);
    CMatrix m = CMatrix::Zero(N, N);
    std::vector<int> digits(d), out(d);
    for (long idx = 0; idx < N; ++idx) {
        long r = idx;
        for (int t = d - 1; t >= 0; --t) digits[t] = static_cast<int>(r % n), r /= n;
        for (int t = 0; t < d; ++t) out[sigma[t]] = digits[t];
        long o = 0;
        for (int t = 0; t < d; ++t) o = o * n + out[t];
        m(o, idx) = 1.0;
    }
    return m;
}

namespace {
int parity(const Permutation& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2;
}

CMatrix signed_sum(int d, int n, bool alternating) {
    const long N = ipow(n, d);
    CMatrix m = CMatrix::Zero(N, N);
    Permutation s(d);
    std::iota(s.begin(), s.end(), 0);
    do {
        double sign = (alternating && parity(s)) ? -1.0 : 1.0;
        m += sign * perm_op(s, n);
    } while (std::next_permutation(s.begin(), s.end()));
    return m;
}
} // namespace

CMatrix symmetrizer(int d, int n) { return signed_sum(d, n, false); }
CMatrix antisymmetrizer(int d, int n) { return signed_sum(d, n, true); }

std::vector<Factor> chain_factors(const ChainArgs& c) {
    const int i = c.i, j = c.j;
    if (i < 1 || j < i) throw Error(ErrorCode::IndexOutOfRange, "chain needs 1 <= i <= j");
    if (static_cast<int>(c.t.size()) != j - i)
        throw Error(ErrorCode::InvalidArgument, "chain needs exactly j-i arguments");
    // t(q) = t_q for q in [i, j-1], whatever order the arguments were listed in
    const bool down = c.kind == ChainKind::FwdDown || c.kind == ChainKind::RevDown;
    auto t = [&](int q) { return down ? c.t[j - 1 - q] : c.t[q - i]; };
    auto sum = [&](int lo, int hi) {
        cplx s = 0;
        for (int q = lo; q <= hi; ++q) s += t(q);
        return s;
    };
    std::vector<Factor> f;
    switch (c.kind) {
    case ChainKind::FwdUp:
        for (int q = i; q < j; ++q) f.push_back({q, sum(q, j - 1)});
        break;
    case ChainKind::FwdDown:
        for (int q = j - 1; q >= i; --q) f.push_back({q, sum(i, q)});
        break;
    case ChainKind::RevUp:
        for (int q = i; q < j; ++q) f.push_back({q, sum(i, q)});
        break;
    case ChainKind::RevDown:
        for (int q = j - 1; q >= i; --q) f.push_back({q, sum(q, j - 1)});
        break;
    }
    return f;
}

OperatorVd factor_product(const AlgebraParams& p, int d, const std::vector<Factor>& factors) {
    OperatorVd out = OperatorVd::identity(p.n, d);
    std::map<std::pair<double, double>, std::pair<CMatrix, double>> cache;
    auto get = [&](cplx z) -> const std::pair<CMatrix, double>& {
        auto key = std::make_pair(z.real(), z.imag());
        auto it = cache.find(key);
        if (it == cache.end()) {
            CMatrix r = r_matrix(p, z);
            const double norm = svd(r, false).sigma(0);
            if (!std::isfinite(norm) || norm <= 0.0)
                throw Error(ErrorCode::InvalidArgument, "R-matrix factor is not finite");
            r *= 1.0 / norm; // Eigen divides complex packets via abs^2, which overflows here
            it = cache.emplace(key, std::make_pair(std::move(r), std::log(norm))).first;
        }
        return it->second;
    };
    // right-to-left so the leftmost factor is applied last
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (it->pos < 1 || it->pos > d - 1) throw Error(ErrorCode::IndexOutOfRange, "factor position out of range");
        const auto& [r, log_norm] = get(it->arg);
        kernels::apply_left_inplace(r, it->pos - 1, 2, p.n, d, out.matrix);
        out.log_scale += log_norm;
    }
    return out;
}

OperatorVd s_chain(const AlgebraParams& p, int d, const ChainArgs& args) {
    if (args.j > d) throw Error(ErrorCode::IndexOutOfRange, "chain exceeds d");
    return factor_product(p, d, chain_factors(args));
}

std::vector<Factor> t_d_factors(int d, const std::vector<cplx>& z) {
    if (d < 0 || static_cast<int>(z.size()) != std::max(d - 1, 0))
        throw Error(ErrorCode::InvalidArgument, "T_d needs d-1 arguments");
    std::vector<Factor> f;
    for (int m = 2; m <= d; ++m) {
        // S_{m->1}(z_1..z_{m-1}); arguments listed as (t_{m-1}, ..., t_1)
        ChainArgs c{ChainKind::FwdDown, 1, m, std::vector<cplx>(z.begin(), z.begin() + (m - 1))};
        auto part = chain_factors(c);
        f.insert(f.end(), part.begin(), part.end());
    }
    return f;
}

OperatorVd t_d(const AlgebraParams& p, int d, const std::vector<cplx>& z) {
    return factor_product(p, d, t_d_factors(d, z));
}

OperatorVd f_d(const AlgebraParams& p, cplx z, int d) {
    return t_d(p, d, std::vector<cplx>(std::max(d - 1, 0), z));
}

std::vector<Factor> m_ab_factors(int a, int b, cplx z, const std::vector<cplx>& x,
                                 const std::vector<cplx>& y, bool by_columns) {
    if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "M_{a,b} needs a, b >= 0");
    std::vector<Factor> f;
    if (a == 0 || b == 0) return f;
    if (static_cast<int>(x.size()) != a - 1 || static_cast<int>(y.size()) != b - 1)
        throw Error(ErrorCode::InvalidArgument, "M_{a,b} needs a-1 x-arguments and b-1 y-arguments");
    cplx sx = 0, sy = 0;
    if (!by_columns) {
        // row p: S^rev_{a-p -> a-p+b}(z + x_1 + ... + x_p, y)
        for (int p = 0; p < a; ++p) {
            if (p > 0) sx += x[p - 1];
            std::vector<cplx> t{z + sx};
            t.insert(t.end(), y.begin(), y.end());
            auto part = chain_factors({ChainKind::RevUp, a - p, a - p + b, t});
            f.insert(f.end(), part.begin(), part.end());
        }
    } else {
        // column q: S^rev_{a+1+q -> 1+q}(z + y_1 + ... + y_q, x)
        for (int q = 0; q < b; ++q) {
            if (q > 0) sy += y[q - 1];
            std::vector<cplx> t{z + sy};
            t.insert(t.end(), x.begin(), x.end());
            auto part = chain_factors({ChainKind::RevDown, 1 + q, a + 1 + q, t});
            f.insert(f.end(), part.begin(), part.end());
        }
    }
    return f;
}

OperatorVd m_ab(const AlgebraParams& p, int a, int b, cplx z, const std::vector<cplx>& x,
                const std::vector<cplx>& y) {
    return factor_product(p, a + b, m_ab_factors(a, b, z, x, y, false));
}

OperatorVd m_ab_decr(const AlgebraParams& p, int a, int b, cplx z, const std::vector<cplx>& x,
                     const std::vector<cplx>& y) {
    return factor_product(p, a + b, m_ab_factors(a, b, z, x, y, true));
}

Subspace embed_subspace(const Subspace& s, int pre, int post, int n) {
    const long a = ipow(n, pre), b = ipow(n, post);
    CMatrix basis = kron(kron(CMatrix::Identity(a, a), s.basis), CMatrix::Identity(b, b));
    return {static_cast<int>(basis.rows()), std::move(basis), s.tol_used};
}

std::vector<Subspace> relation_components(const AlgebraParams& p, int d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "relation space needs d >= 2");
    const Subspace rel = image(relation_operator(p), p.ranks);
    std::vector<Subspace> w;
    for (int i = 1; i <= d - 1; ++i) w.push_back(embed_subspace(rel, i - 1, d - i - 1, p.n));
    return w;
}

Subspace relation_space(const AlgebraParams& p, int d) {
    return subspace_sum(relation_components(p, d), p.ranks);
}

} // namespace qnk
