#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "qnk/linalg.hpp"

using namespace qnk;

namespace {

std::mt19937_64 rng(7);

CMatrix random_matrix(int r, int c) {
    std::normal_distribution<double> g;
    CMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

// rows x cols of rank exactly k (generically)
CMatrix rank_k(int rows, int cols, int k) { return random_matrix(rows, k) * random_matrix(k, cols); }

CMatrix coords(int amb, std::initializer_list<int> idx) {
    CMatrix b = CMatrix::Zero(amb, static_cast<Eigen::Index>(idx.size()));
    int c = 0;
    for (int i : idx) b(i, c++) = 1.0;
    return b;
}

} // namespace

TEST_CASE("svd reconstructs its input") {
    for (auto [r, c, k] : {std::tuple{12, 12, 12}, {30, 9, 4}, {9, 30, 9}, {40, 40, 7}}) {
        const CMatrix m = rank_k(r, c, k);
        const Svd s = svd(m);
        const CMatrix back = s.U * s.sigma.cast<cplx>().asDiagonal() * s.V.adjoint();
        CHECK((back - m).norm() / m.norm() < 1e-13);
        CHECK((s.U.adjoint() * s.U - CMatrix::Identity(s.U.cols(), s.U.cols())).norm() < 1e-12);
        for (int i = 1; i < s.sigma.size(); ++i) CHECK(s.sigma(i) <= s.sigma(i - 1));
        CHECK(svd(m, false).sigma.isApprox(s.sigma, 1e-12));
    }
}

TEST_CASE("svd of stacked embedded bases with repeated singular values") {
    // [I(x)Q(x)I(x)I, I(x)I(x)Q(x)I, ...]: the shape of a relation-space sum
    const int n = 4, d = 4;
    const CMatrix q = image(random_matrix(n * n, 10)).basis;
    std::vector<CMatrix> parts;
    for (int i = 0; i < d - 1; ++i) {
        const long pre = 1L << (2 * i), post = 1L << (2 * (d - i - 2));
        parts.push_back(kron(kron(CMatrix::Identity(pre, pre), q), CMatrix::Identity(post, post)));
    }
    CMatrix cat(256, 480);
    for (int i = 0; i < 3; ++i) cat.middleCols(160 * i, 160) = parts[i];
    const Svd s = svd(cat);
    CHECK((s.U * s.sigma.cast<cplx>().asDiagonal() * s.V.adjoint() - cat).norm() / cat.norm() < 1e-12);
    CHECK((s.U.adjoint() * s.U - CMatrix::Identity(256, 256)).norm() < 1e-10);
}

TEST_CASE("svd rejects non-finite input") {
    CMatrix m = CMatrix::Identity(3, 3);
    m(1, 2) = cplx(std::numeric_limits<double>::infinity(), 0);
    CHECK_THROWS_AS(svd(m), Error);
}

TEST_CASE("rank of constructed low-rank matrices") {
    for (int k : {0, 1, 3, 8}) {
        const CMatrix m = k == 0 ? CMatrix::Zero(10, 8) : rank_k(10, 8, k);
        const RankInfo info = svd_rank(m);
        CHECK(info.rank == k);
        CHECK(info.gap > 1e4);
    }
    // ref_scale certifies a tiny operator as zero
    const CMatrix tiny = 1e-14 * random_matrix(4, 4);
    CHECK(svd_rank(tiny).rank == 4);
    CHECK(svd_rank(tiny, {}, 1.0).rank == 0);
}

TEST_CASE("ambiguous gap throws") {
    Eigen::VectorXcd d(3);
    d << 1.0, 5e-9, 5e-10;
    const CMatrix m = d.asDiagonal();
    CHECK_THROWS_AS(svd_rank(m), AmbiguousRankError);
    const RankInfo info = svd_rank_unchecked(m);
    CHECK(info.ambiguous(RankPolicy{}));
    CHECK(info.rank == 2);
    RankPolicy bad;
    bad.min_gap = 0.5;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("kernel and image") {
    const CMatrix m = rank_k(7, 11, 4);
    const Subspace K = kernel(m), I = image(m);
    CHECK(K.dim() == 7);
    CHECK(I.dim() == 4);
    CHECK((m * K.basis).norm() < 1e-12 * m.norm());
    CHECK((K.basis.adjoint() * K.basis - CMatrix::Identity(7, 7)).norm() < 1e-12);
    // every column of m lies in the image
    CHECK((m - I.basis * (I.basis.adjoint() * m)).norm() < 1e-12 * m.norm());
    CHECK(kernel(CMatrix::Zero(3, 5)).dim() == 5);
    CHECK(image(CMatrix::Zero(3, 5)).dim() == 0);
}

TEST_CASE("kernel of exactly singular projectors stays orthonormal") {
    // stacked coordinate projectors: singular values exactly 0 and 1
    CMatrix m = CMatrix::Zero(18, 9);
    for (int i = 0; i < 5; ++i) m(i, i) = 1.0;
    for (int i = 0; i < 5; ++i) m(9 + i, i) = 1.0;
    const Subspace K = kernel(m);
    CHECK(K.dim() == 4);
    CHECK((K.basis.adjoint() * K.basis - CMatrix::Identity(4, 4)).norm() < 1e-12);
    CHECK((m * K.basis).norm() < 1e-12);
}

TEST_CASE("sums and intersections of coordinate subspaces") {
    const int n = 6;
    const Subspace a = Subspace::from_orthonormal(coords(n, {0, 1, 2}));
    const Subspace b = Subspace::from_orthonormal(coords(n, {2, 3}));
    const Subspace c = Subspace::from_orthonormal(coords(n, {1, 2, 3, 4}));
    CHECK(subspace_sum({a, b}).dim() == 4);
    CHECK(subspace_sum({a, b, c}).dim() == 5);
    CHECK(subspace_intersect({a, b}).dim() == 1);
    CHECK(subspace_intersect({a, c}).dim() == 2);
    CHECK(subspace_intersect({a, b, c}).dim() == 1);
    CHECK(subspace_intersect({a, Subspace::zero(n)}).dim() == 0);
    CHECK(subspace_intersect({a, Subspace::ambient(n)}).dim() == 3);
    CHECK(subspace_equal(subspace_intersect({a, b}), Subspace::from_orthonormal(coords(n, {2}))).equal);
    CHECK_THROWS_AS(subspace_sum({}), Error);
    CHECK_THROWS_AS(subspace_sum({a, Subspace::zero(n + 1)}), Error);
}

TEST_CASE("intersection of random subspaces has the generic dimension") {
    // dim(A cap B) = dim A + dim B - ambient for generic A, B
    const int amb = 20;
    const Subspace A = image(random_matrix(amb, 13)), B = image(random_matrix(amb, 11));
    const Subspace C = subspace_intersect({A, B});
    CHECK(C.dim() == 4);
    // C lies inside both
    CHECK((C.basis - A.basis * (A.basis.adjoint() * C.basis)).norm() < 1e-10);
    CHECK((C.basis - B.basis * (B.basis.adjoint() * C.basis)).norm() < 1e-10);
}

TEST_CASE("principal angles") {
    const int n = 4;
    const Subspace a = Subspace::from_orthonormal(coords(n, {0}));
    CMatrix v(n, 1);
    v << std::cos(0.01), std::sin(0.01), 0, 0;
    const Subspace b = Subspace::from_orthonormal(v);
    const auto cmp = subspace_equal(a, b);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.max_principal_angle == doctest::Approx(0.01).epsilon(1e-6));
    CHECK(subspace_equal(a, b, 0.02).equal);
    CHECK_FALSE(subspace_equal(a, Subspace::from_orthonormal(coords(n, {0, 1}))).equal);
}

TEST_CASE("apply maps a subspace") {
    const CMatrix op = rank_k(6, 6, 2);
    const Subspace all = Subspace::ambient(6);
    CHECK(apply(op, all).dim() == 2);
    CHECK(subspace_equal(apply(op, all), image(op)).equal);
}

TEST_CASE("log_determinant") {
    const CMatrix m = random_matrix(8, 8);
    const cplx det = m.determinant();
    const cplx ld = log_determinant(m);
    CHECK(std::abs(std::exp(ld) - det) / std::abs(det) < 1e-12);
    // far outside double range: log det(s A) = N log s + log det A
    const double s = 1e60;
    const CMatrix big = random_matrix(30, 30);
    const cplx lb = log_determinant(big), lbs = log_determinant(big * s);
    CHECK(std::isfinite(lbs.real()));
    CHECK(lbs.real() == doctest::Approx(lb.real() + 30 * std::log(s)).epsilon(1e-12));
    CHECK(std::abs(std::remainder(lbs.imag() - lb.imag(), 2 * std::numbers::pi)) < 1e-9);
    CHECK_THROWS_AS(log_determinant(CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("rel_residual and kron") {
    const CMatrix a = random_matrix(3, 3);
    CHECK(rel_residual(a, a) == 0.0);
    CHECK(rel_residual(CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)) == 0.0);
    CHECK(rel_residual(a, -a) == doctest::Approx(2.0));
    const CMatrix b = random_matrix(2, 4);
    const CMatrix k = kron(a, b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 12);
    CHECK(std::abs(k(1 * 2 + 1, 2 * 4 + 3) - a(1, 2) * b(1, 3)) < 1e-15);
}
