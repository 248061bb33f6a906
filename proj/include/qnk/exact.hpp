#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qnk {

using BigInt = boost::multiprecision::cpp_int;

struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a; // row-major

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static ExactMatrix identity(int n);

    BigInt& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const BigInt& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
ExactMatrix hstack(const std::vector<ExactMatrix>& parts);
ExactMatrix vstack(const std::vector<ExactMatrix>& parts);
ExactMatrix kron(const ExactMatrix& x, const ExactMatrix& y);

// Rank by fraction-free (Bareiss) elimination.
int exact_rank(ExactMatrix m);

// Integer columns spanning the null space (rational Gauss-Jordan, then cleared denominators).
ExactMatrix exact_kernel_basis(const ExactMatrix& m);

} // namespace qnk
