#include <benchmark/benchmark.h>

#include "recourse/all_flip.hpp"
#include "recourse/bmatch.hpp"
#include "recourse/generators.hpp"
#include "recourse/oracle.hpp"
#include "recourse/shortest_path.hpp"

namespace {

using namespace recourse;

void BM_ShortestPathForest(benchmark::State& state) {
  const auto edges = random_forest(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto steps = sp_run_sequence(SpConfig{}, edges);
    benchmark::DoNotOptimize(steps.back().cumulative_recourse);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShortestPathForest)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_AllFlipArboricity2(benchmark::State& state) {
  const auto inst = arboricity_bounded(static_cast<std::size_t>(state.range(0)), 2, 11);
  for (auto _ : state) {
    auto steps = af_run_sequence(AllFlipConfig{2, 4, TiePolicy::toward_first()}, inst.edges);
    benchmark::DoNotOptimize(steps.back().cumulative_recourse);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.edges.size()));
}
BENCHMARK(BM_AllFlipArboricity2)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_BMatchFeasible(benchmark::State& state) {
  const auto inst = bmatch_feasible(static_cast<std::size_t>(state.range(0)), 2, 3);
  for (auto _ : state) {
    auto steps = bm_run_sequence(BMatchConfig{}, inst.arrivals);
    benchmark::DoNotOptimize(steps.back().cumulative_recourse);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BMatchFeasible)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_BMatchHeights(benchmark::State& state) {
  const auto inst = bmatch_feasible(static_cast<std::size_t>(state.range(0)), 1, 5);
  OnlineBMatcher matcher(BMatchConfig{});
  for (const auto& a : inst.arrivals) matcher.process_arrival(a);
  for (auto _ : state) benchmark::DoNotOptimize(matcher.heights().phi);
}
BENCHMARK(BM_BMatchHeights)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMicrosecond);

void BM_OracleMinMaxLoad(benchmark::State& state) {
  const auto inst = bmatch_feasible(static_cast<std::size_t>(state.range(0)), 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(min_max_load(inst.arrivals).value);
}
BENCHMARK(BM_OracleMinMaxLoad)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
