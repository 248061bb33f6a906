#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qnk/exact.hpp"
#include "qnk/linalg.hpp"

using namespace qnk;

namespace {

CMatrix to_numeric(const ExactMatrix& m) {
    CMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j).convert_to<double>();
    return out;
}

ExactMatrix random_int(int r, int c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> u(lo, hi);
    ExactMatrix m(r, c);
    for (auto& x : m.a) x = u(rng);
    return m;
}

} // namespace

TEST_CASE("rank of Vandermonde-type matrices") {
    // rows (1, x, x^2, ..., x^(c-1)) for distinct x: rank min(r, c)
    for (auto [r, c] : {std::pair{4, 6}, {6, 4}, {5, 5}}) {
        ExactMatrix v(r, c);
        for (int i = 0; i < r; ++i) {
            BigInt p = 1;
            for (int j = 0; j < c; ++j, p *= (i + 2)) v(i, j) = p;
        }
        CHECK(exact_rank(v) == std::min(r, c));
    }
}

TEST_CASE("exact rank agrees with numeric rank on small integer matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 5;
        const ExactMatrix m = random_int(9, k, rng) * random_int(k, 7, rng);
        CHECK(exact_rank(m) == svd_rank(to_numeric(m)).rank);
    }
}

TEST_CASE("exact rank handles large entries without overflow") {
    // 2 x 2 with entries near 2^100: determinant 1
    ExactMatrix m(2, 2);
    BigInt big = BigInt(1) << 100;
    m(0, 0) = big + 1;
    m(0, 1) = big;
    m(1, 0) = big;
    m(1, 1) = big - 1;
    // (big+1)(big-1) - big^2 = -1
    CHECK(exact_rank(m) == 2);
    ExactMatrix s(2, 2);
    s(0, 0) = big;
    s(0, 1) = 2 * big;
    s(1, 0) = 3 * big;
    s(1, 1) = 6 * big;
    CHECK(exact_rank(s) == 1);
}

TEST_CASE("kernel basis is integral and complete") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 1 + trial % 4;
        const ExactMatrix m = random_int(6, k, rng) * random_int(k, 8, rng);
        const ExactMatrix K = exact_kernel_basis(m);
        CHECK(K.rows == 8);
        CHECK(K.cols == 8 - exact_rank(m));
        const ExactMatrix z = m * K;
        bool zero = true;
        for (const auto& x : z.a) zero = zero && x == 0;
        CHECK(zero);
        CHECK(exact_rank(K) == K.cols);
    }
    CHECK(exact_kernel_basis(ExactMatrix::identity(4)).cols == 0);
    CHECK(exact_kernel_basis(ExactMatrix(3, 5)).cols == 5);
}

TEST_CASE("stacking and Kronecker products") {
    const ExactMatrix a = ExactMatrix::identity(2);
    ExactMatrix b(1, 2);
    b(0, 0) = 1;
    b(0, 1) = -1;
    const ExactMatrix h = hstack({a, a});
    CHECK(h.rows == 2);
    CHECK(h.cols == 4);
    CHECK(exact_rank(h) == 2);
    const ExactMatrix v = vstack({a, b});
    CHECK(v.rows == 3);
    CHECK(exact_rank(v) == 2);
    const ExactMatrix k = kron(b, b);
    CHECK(k.rows == 1);
    CHECK(k.cols == 4);
    CHECK(k(0, 0) == 1);
    CHECK(k(0, 1) == -1);
    CHECK(k(0, 3) == 1);
    CHECK_THROWS_AS(a * b, Error);
}
