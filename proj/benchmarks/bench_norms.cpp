#include <benchmark/benchmark.h>

#include <random>

#include "xsep/norms.hpp"
#include "xsep/separability.hpp"

using namespace xsep;

namespace {

DiagVec random_positive(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.1, 4.0);
    DiagVec s(n);
    for (std::uint32_t r = 0; r < s.dim(); ++r) s[r] = uni(rng);
    return s;
}

HermVec random_herm(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mod(0.1, 2.0);
    std::uniform_real_distribution<double> ang(-3.14, 3.14);
    std::vector<Complex> reps(dim_of(n) / 2);
    for (auto& z : reps) z = std::polar(mod(rng), ang(rng));
    return HermVec::from_reps(n, std::move(reps));
}

OptimConfig bench_cfg() {
    OptimConfig cfg;
    cfg.multistart = 6;
    cfg.grid = 40000;
    cfg.mp_steps = 16;
    cfg.refine_budget = 120000;
    return cfg;
}

}  // namespace

static void BM_Delta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto s = random_positive(n, 11);
    const auto cfg = bench_cfg();
    for (auto _ : state) benchmark::DoNotOptimize(delta(s, cfg));
}
BENCHMARK(BM_Delta)->DenseRange(3, 6);

static void BM_Xnorm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto u = random_herm(n, 13);
    const auto cfg = bench_cfg();
    for (auto _ : state) benchmark::DoNotOptimize(xnorm(u, cfg));
}
BENCHMARK(BM_Xnorm)->DenseRange(3, 5);

static void BM_DualNorm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto c = random_herm(n, 17);
    const auto cfg = bench_cfg();
    for (auto _ : state) benchmark::DoNotOptimize(dual_norm(c, cfg));
}
BENCHMARK(BM_DualNorm)->DenseRange(3, 4);

static void BM_DecideXState(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(23);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    DiagVec a(n);
    double sum = 0.0;
    for (std::uint32_t r = 0; r < a.dim(); ++r) sum += (a[r] = expo(rng));
    for (std::uint32_t r = 0; r < a.dim(); ++r) a[r] /= sum;
    std::vector<Complex> reps(a.dim() / 2);
    for (std::uint32_t r = 0; r < reps.size(); ++r)
        reps[r] = std::polar(std::sqrt(a[r] * a[complement_rank(n, r)]) * uni(rng), uni(rng));
    const XState x(a, HermVec::from_reps(n, std::move(reps)));
    const auto cfg = bench_cfg();
    for (auto _ : state) benchmark::DoNotOptimize(decide_xstate(x, cfg));
}
BENCHMARK(BM_DecideXState)->DenseRange(2, 4);
