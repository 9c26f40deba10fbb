#include <benchmark/benchmark.h>

#include "ktau/bench.hpp"
#include "ktau/inference.hpp"
#include "ktau/oracle.hpp"
#include "ktau/tau.hpp"

namespace {

void BM_KendallTau(benchmark::State& state) {
  const auto sample = ktau::bench::generate_random_sample(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ktau::kendall_tau(sample).tau);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KendallTau)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_BruteForceTau(benchmark::State& state) {
  const auto sample = ktau::bench::generate_random_sample(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ktau::oracle::brute_force_tau(sample));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceTau)->RangeMultiplier(2)->Range(1 << 8, 1 << 13)->Complexity(benchmark::oNSquared);

void BM_KendallTest(benchmark::State& state) {
  const auto sample = ktau::bench::generate_random_sample(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ktau::kendall_test(sample).p_value);
}
BENCHMARK(BM_KendallTest)->Arg(40)->Arg(1000)->Arg(100000);

void BM_ExactNullCdf(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ktau::exact_null_cdf(0, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ExactNullCdf)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

}  // namespace

BENCHMARK_MAIN();
