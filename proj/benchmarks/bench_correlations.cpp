#include <benchmark/benchmark.h>

#include "spinchain/correlations.hpp"

using namespace spinchain;

namespace {

const XState k_state{0.2, 0.9, 0.55};

void BM_CorrelationReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_report(k_state));
  }
}
BENCHMARK(BM_CorrelationReport);

void BM_ClassicalSweep(benchmark::State& state) {
  SweepOptions options;
  options.grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classical_correlation_sweep(k_state, options));
  }
}
BENCHMARK(BM_ClassicalSweep)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_WoottersConcurrence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_wootters(k_state));
  }
}
BENCHMARK(BM_WoottersConcurrence);

}  // namespace

BENCHMARK_MAIN();
