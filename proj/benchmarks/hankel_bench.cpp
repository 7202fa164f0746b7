#include <benchmark/benchmark.h>

#include <random>

#include "hankel_lab/hankel.hpp"
#include "hankel_lab/series.hpp"

namespace {

using namespace hankel_lab;

void BM_DyckDp(benchmark::State& state) {
  const AvoidingSet set(7, {2, 5});
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dyck_count_dp(set, size));
}
BENCHMARK(BM_DyckDp)->Arg(20)->Arg(60)->Arg(120);

void BM_ContinuedFraction(benchmark::State& state) {
  const AvoidingSet set(7, {2, 5});
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series_cf(set, size));
}
BENCHMARK(BM_ContinuedFraction)->Arg(20)->Arg(60);

void BM_Bareiss(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-50, 50);
  IntMatrix a(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) a(i, j) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_det(a));
}
BENCHMARK(BM_Bareiss)->Arg(8)->Arg(24)->Arg(48);

// Leading-minor sweep against one Bareiss elimination per order.
void BM_HankelSweep(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto d = dyck_count_dp(AvoidingSet(6, {1, 2, 3, 4, 5}), 2 * count);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_sequence(d, count));
}
BENCHMARK(BM_HankelSweep)->Arg(20)->Arg(40)->Arg(60);

void BM_HankelIndependent(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto d = dyck_count_dp(AvoidingSet(6, {1, 2, 3, 4, 5}), 2 * count);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hankel_sequence(d, count, 0, HankelMethod::kIndependent));
  }
}
BENCHMARK(BM_HankelIndependent)->Arg(20)->Arg(40)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
