#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnk/classical.hpp"
#include "qnk/linalg.hpp"

using namespace qnk;

namespace {

CMatrix to_numeric(const ExactMatrix& m) {
    CMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j).convert_to<double>();
    return out;
}

Subspace span(const ExactMatrix& m) {
    if (m.cols == 0) return Subspace::zero(m.rows);
    return image(to_numeric(m));
}

// dim(Sigma_ell cap I_r) by floating-point subspace intersection
long numeric_w_dim(int n, int d, int ell, int r) {
    if (ell == 0) return 0;
    const Subspace s = span(classical_subspaces(n, d, ClassicalKind::Sigma, ell));
    const Subspace i = span(classical_subspaces(n, d, ClassicalKind::I, r));
    return subspace_intersect({s, i}).dim();
}

} // namespace

TEST_CASE("binomial and powers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(ipow_l(3, 4) == 81);
}

TEST_CASE("Hilbert dimensions of the polynomial and exterior algebras") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d) {
            const ClassicalHilbert h = classical_hilbert(n, d);
            CHECK(h.poly_dim == binomial(n + d - 1, d));
            CHECK(h.ext_dim == binomial(n, d));
            CHECK(h.poly_rank_exact == h.poly_dim);
            CHECK(h.ext_rank_exact == h.ext_dim);
        }
}

TEST_CASE("spanning sets have the expected dimensions") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= 4; ++d) {
            const long N = ipow_l(n, d);
            for (int i = 1; i <= d - 1; ++i)
                CHECK(exact_rank(classical_subspaces(n, d, ClassicalKind::Lambda, i)) ==
                      ipow_l(n, d - 2) * binomial(n, 2));
            // all relations: complement of the symmetric tensors
            CHECK(exact_rank(classical_subspaces(n, d, ClassicalKind::Sigma, d - 1)) ==
                  N - binomial(n + d - 1, d));
            // intersection of all: antisymmetric tensors
            CHECK(exact_rank(classical_subspaces(n, d, ClassicalKind::I, d - 1)) == binomial(n, d));
            CHECK(classical_subspaces(n, d, ClassicalKind::I, 0).cols == N);
            CHECK(classical_subspaces(n, d, ClassicalKind::Sigma, 0).cols == 0);
        }
    CHECK_THROWS_AS(classical_subspaces(2, 3, ClassicalKind::Lambda, 3), Error);
    CHECK_THROWS_AS(classical_subspaces(2, 6, ClassicalKind::Sigma, 1), Error);
}

TEST_CASE("lattice dimensions agree with floating-point intersections") {
    for (auto [n, d] : {std::pair{2, 3}, {2, 4}, {3, 3}, {3, 4}})
        for (int ell = 0; ell <= d - 1; ++ell) {
            const int r = d - 1 - ell;
            CHECK(classical_w_dim(n, d, ell, r) == numeric_w_dim(n, d, ell, r));
        }
    CHECK_THROWS_AS(classical_w_dim(3, 3, 1, 2), Error);
}

TEST_CASE("boundary values of the lattice") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= 4; ++d) {
            // Sigma_{d-1} cap I_0 = Sigma_{d-1}
            CHECK(classical_w_dim(n, d, d - 1, 0) == ipow_l(n, d) - binomial(n + d - 1, d));
            CHECK(classical_w_dim(n, d, 0, d - 1) == 0);
        }
}

TEST_CASE("inclusion-exclusion terms match their closed forms") {
    for (auto [n, d] : {std::pair{2, 3}, {2, 4}, {3, 3}, {3, 4}})
        for (int ell = 1; ell <= d - 1; ++ell) {
            const auto ie = classical_inclusion_exclusion(n, d, ell);
            CHECK(ie.x_z == ie.x_z_closed);
            CHECK(ie.y_z == ie.y_z_closed);
            // X + Y = Sigma_ell, so distributivity makes the count additive
            CHECK(ie.w == ie.x_z + ie.y_z - ie.x_y_z);
        }
}

TEST_CASE("integer (anti)symmetrizers") {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d) {
            CHECK(exact_rank(exact_symmetrizer(d, n, false)) == binomial(n + d - 1, d));
            CHECK(exact_rank(exact_symmetrizer(d, n, true)) == binomial(n, d));
        }
    // sum over S_d squares to d! times itself
    const ExactMatrix s = exact_symmetrizer(3, 2, false);
    const ExactMatrix s2 = s * s;
    bool ok = true;
    for (size_t i = 0; i < s.a.size(); ++i) ok = ok && s2.a[i] == 6 * s.a[i];
    CHECK(ok);
}

TEST_CASE("shuffle decomposition of the symmetric group") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 6; ++b) CHECK(shuffle_identity_check(a, b));
}
