#include <benchmark/benchmark.h>

#include "spinchain/analysis.hpp"
#include "spinchain/decoherence.hpp"

using namespace spinchain;

namespace {

DecoherenceConfig critical_config(int sites) {
  return {{sites, 1.0, 1.0, 0.1}, {0.05, 0.0}, Sector::uu, Sector::dd};
}

void BM_EvaluatorBuild(benchmark::State& state) {
  const DecoherenceConfig config = critical_config(state.range(0));
  for (auto _ : state) {
    DecoherenceEvaluator factor(config);
    benchmark::DoNotOptimize(factor);
  }
}
BENCHMARK(BM_EvaluatorBuild)->Arg(101)->Arg(401)->Arg(2001);

void BM_FactorEval(benchmark::State& state) {
  const DecoherenceEvaluator factor(critical_config(state.range(0)));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(factor(t));
  }
}
BENCHMARK(BM_FactorEval)->Arg(101)->Arg(401)->Arg(2001);

void BM_OverlapOracle(benchmark::State& state) {
  const DecoherenceConfig config = critical_config(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    t += 0.01;
    benchmark::DoNotOptimize(mode_overlap_oracle(config, t));
  }
}
BENCHMARK(BM_OverlapOracle)->Arg(101)->Arg(401);

void BM_TimeSeries(benchmark::State& state) {
  RunConfig config;
  config.chain = {static_cast<int>(state.range(0)), 1.0, 1.0, 0.0};
  config.coupling = {0.05, 0.0};
  config.coeffs = {1.0, -1.0, 1.0};
  config.grid = {20.0, 2000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(time_series(config));
  }
}
BENCHMARK(BM_TimeSeries)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
