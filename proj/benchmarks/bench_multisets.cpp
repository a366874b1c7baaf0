#include <benchmark/benchmark.h>

#include "xsep/multisets.hpp"

using namespace xsep;

static void BM_EnumerateIrreducible(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int max_order = n <= 4 ? static_cast<int>(dim_of(n) / 2) : 6;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_irreducible(n, max_order));
}
BENCHMARK(BM_EnumerateIrreducible)->DenseRange(3, 5);

static void BM_RecursiveT4(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(recursive_t4(n));
}
BENCHMARK(BM_RecursiveT4)->DenseRange(4, 8);

static void BM_TildeDelta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DiagVec a(n, 1.0);
    for (std::uint32_t r = 0; r < a.dim(); ++r) a[r] = 0.5 + 0.01 * r;
    const auto& cat = cached_catalog(n);
    for (auto _ : state) benchmark::DoNotOptimize(tilde_delta(a, cat));
}
BENCHMARK(BM_TildeDelta)->DenseRange(3, 6);
