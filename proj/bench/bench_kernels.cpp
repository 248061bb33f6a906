// Parallel vs serial application of a two-site operator on V^(x)d.

#include <benchmark/benchmark.h>

#include "qnk/kernels.hpp"

using namespace qnk;

namespace {

void setup(benchmark::State& state, CMatrix& a, CMatrix& m, int& n, int& d) {
    n = static_cast<int>(state.range(0));
    d = static_cast<int>(state.range(1));
    const long N = kernels::ipow(n, d);
    a = CMatrix::Random(n * n, n * n);
    m = CMatrix::Random(N, N);
}

void BM_apply_left(benchmark::State& state) {
    CMatrix a, m;
    int n, d;
    setup(state, a, m, n, d);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_left(a, 1, 2, n, d, m));
}

void BM_apply_left_serial(benchmark::State& state) {
    CMatrix a, m;
    int n, d;
    setup(state, a, m, n, d);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::apply_left_serial(a, 1, 2, n, d, m));
}

} // namespace

BENCHMARK(BM_apply_left)->Args({3, 4})->Args({4, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_left_serial)->Args({3, 4})->Args({4, 4})->Args({3, 5})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
