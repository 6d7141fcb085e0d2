// Microbenchmarks for world sampling, reachability and the selection loops.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "balance/cascade.hpp"
#include "balance/objective.hpp"
#include "balance/selection.hpp"
#include "balance/synth.hpp"

namespace {

using namespace balance;

SyntheticInstance instance(std::size_t n, CascadeModel model) {
  SynthParams params;
  params.n = n;
  params.model = model;
  params.seed = 7;
  return generate_synthetic(params);
}

void BM_BuildEnsemble(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)), CascadeModel::kHeterogeneous);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_ensemble(inst.graph, CascadeModel::kHeterogeneous, 100, 1));
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_BuildEnsemble)->Arg(1000)->Arg(10000);

void BM_Reach(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)), CascadeModel::kHeterogeneous);
  const auto ens = build_ensemble(inst.graph, CascadeModel::kHeterogeneous, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reach(ens[0], Campaign::kFirst, inst.i1));
}
BENCHMARK(BM_Reach)->Arg(1000)->Arg(10000);

void BM_EstimatePhi(benchmark::State& state) {
  const auto inst = instance(2000, CascadeModel::kHeterogeneous);
  const auto ens = build_ensemble(inst.graph, CascadeModel::kHeterogeneous, 100, 1);
  const auto assign = SeedAssignment::initial(inst.i1, inst.i2);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_phi(ens, assign));
}
BENCHMARK(BM_EstimatePhi);

template <auto Run>
void BM_Select(benchmark::State& state) {
  const auto inst = instance(2000, CascadeModel::kHeterogeneous);
  const auto ens = build_ensemble(inst.graph, CascadeModel::kHeterogeneous, 100, 1);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Run(ens, inst.graph, inst.i1, inst.i2, k));
}
BENCHMARK(BM_Select<run_cover>)->Name("BM_Cover")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Select<run_common>)->Name("BM_Common")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Select<run_hedge>)->Name("BM_Hedge")->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Select<run_greedy_phi>)->Name("BM_Greedy")->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
