// Serial reference vs OpenMP path for the sample sweeps. Arg 0 selects the
// path (0 serial, 1 parallel), arg 1 the sample count.

#include <benchmark/benchmark.h>

#include "cohq/classifier.hpp"
#include "cohq/kernels.hpp"

namespace {

cohq::Execution path(const benchmark::State& state) {
  return state.range(0) == 0 ? cohq::Execution::serial : cohq::Execution::parallel;
}

void BM_Theorem1HaarPure(benchmark::State& state) {
  const cohq::EnsembleSpec spec{cohq::EnsembleKind::haar_pure, 1, 42, static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cohq::theorem1_samples(spec, path(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Theorem1Ginibre(benchmark::State& state) {
  const cohq::EnsembleSpec spec{cohq::EnsembleKind::ginibre, 4, 42, static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cohq::theorem1_samples(spec, path(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_ChainAudit(benchmark::State& state) {
  const cohq::EnsembleSpec spec{cohq::EnsembleKind::ginibre, 4, 42, static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cohq::theorem1_chain_audit(spec, path(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_AppendixAudit(benchmark::State& state) {
  const cohq::EnsembleSpec spec{cohq::EnsembleKind::ginibre, 4, 42, static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cohq::appendix_a_audit(spec, path(state)));
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_CanonicalUniformTheta(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohq::canonical_samples(42, n, cohq::ThetaMode::uniform, path(state)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void paths(benchmark::internal::Benchmark* b) {
  for (int p : {0, 1}) b->Args({p, 2000});
  b->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Theorem1HaarPure)->Apply(paths);
BENCHMARK(BM_Theorem1Ginibre)->Apply(paths);
BENCHMARK(BM_ChainAudit)->Apply(paths);
BENCHMARK(BM_AppendixAudit)->Apply(paths);
BENCHMARK(BM_CanonicalUniformTheta)->Apply(paths);

BENCHMARK_MAIN();
