// Serial reference vs OpenMP row-parallel truncated product, and the
// end-to-end localization sweep that leans on it.

#include <benchmark/benchmark.h>

#include <random>

#include "hamloc/kernels.hpp"
#include "hamloc/theorems.hpp"

namespace {

hamloc::TruncPoly dense_class(int k, int t_degree, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-50, 50);
  hamloc::TruncPoly p(k);
  for (int t = 0; t <= t_degree; ++t)
    for (int u = 0; u <= k; ++u) p.add_term(t, u, hamloc::Rational(coeff(rng), 1 + (t + u) % 7));
  return p;
}

void BM_MultiplySerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto a = dense_class(k, k, 1), b = dense_class(k, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hamloc::kernels::multiply_serial(a.terms(), b.terms(), k));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto a = dense_class(k, k, 1), b = dense_class(k, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hamloc::kernels::multiply_parallel(a.terms(), b.terms(), k));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_LocalizationSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hamloc::theorems::localization_sweep(n));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LocalizationSweep)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
