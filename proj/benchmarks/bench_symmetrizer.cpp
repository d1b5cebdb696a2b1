#include <benchmark/benchmark.h>

#include "qtwist/racks.hpp"

using namespace qtwist;

// quantum symmetrizer assembly + kernel extraction on the FK models
static void BM_SymmetrizerKernel(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int deg = static_cast<int>(state.range(1));
    auto V = fk_model(n, FKCocycle::MinusOne);
    for (auto _ : state) {
        SparseEndo Q = quantum_symmetrizer(*V, deg);
        auto kernel = kernel_basis(Q);
        benchmark::DoNotOptimize(kernel.size());
    }
}
BENCHMARK(BM_SymmetrizerKernel)->Args({3, 2})->Args({3, 4})->Args({4, 2})->Args({4, 3});

static void BM_NicholsHilbert(benchmark::State& state) {
    for (auto _ : state) {
        auto series = nichols_hilbert(3, FKCocycle::MinusOne, 4);
        benchmark::DoNotOptimize(series.back());
    }
}
BENCHMARK(BM_NicholsHilbert);
