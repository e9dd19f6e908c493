#include <benchmark/benchmark.h>

#include "levytree/functionals.hpp"
#include "levytree/sampler.hpp"
#include "levytree/spine_zoom.hpp"
#include "levytree/stable.hpp"
#include "levytree/subordinator.hpp"

namespace levytree {
namespace {

void BM_BgwGeometric(benchmark::State& state) {
  const ConditionedBgwSampler s(OffspringLaw::geometric(), static_cast<std::size_t>(state.range(0)));
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BgwGeometric)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BgwZipfSplit(benchmark::State& state) {
  const ConditionedBgwSampler s(OffspringLaw::zipf(1.5), static_cast<std::size_t>(state.range(0)),
                                ConditioningMethod::kSplit);
  RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BgwZipfSplit)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BgwZipfSetup(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConditionedBgwSampler(OffspringLaw::zipf(1.5),
                                                   static_cast<std::size_t>(state.range(0)),
                                                   ConditioningMethod::kSplit));
  }
}
BENCHMARK(BM_BgwZipfSetup)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BrownianTree(benchmark::State& state) {
  RngStream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_brownian_tree(static_cast<std::size_t>(state.range(0)), rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BrownianTree)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_ZTotal(benchmark::State& state) {
  RngStream rng(4, 0);
  const WeightedTree t = scale_to_unit(
      ConditionedBgwSampler(OffspringLaw::geometric(), static_cast<std::size_t>(state.range(0))).sample(rng),
      2.0, 1.0);
  const FunctionalParams p{4.0, 1.0, 2.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(z_total(t, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ZTotal)->Arg(100000);

void BM_ZoomMeasure(benchmark::State& state) {
  RngStream rng(5, 0);
  const WeightedTree t =
      scale_to_unit(ConditionedBgwSampler(OffspringLaw::geometric(), 100000).sample(rng), 2.0, 1.0);
  for (auto _ : state) {
    const VertexId u = sample_mass_vertex(t, rng);
    if (t.height(u) > 0.0) benchmark::DoNotOptimize(zoom_measure(t, u, 0.01, ZoomSpeed{}, 2.0));
  }
}
BENCHMARK(BM_ZoomMeasure);

void BM_PositiveStable(benchmark::State& state) {
  const PositiveStable x(static_cast<double>(state.range(0)) / 100.0);
  RngStream rng(6, 0);
  for (auto _ : state) benchmark::DoNotOptimize(x(rng));
}
BENCHMARK(BM_PositiveStable)->Arg(50)->Arg(33);

void BM_LimitIntegral(benchmark::State& state) {
  RngStream rng(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(limit_integral(2.0, 0.0, 1.0, 1e-3, 1e-6, rng));
}
BENCHMARK(BM_LimitIntegral)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace levytree

BENCHMARK_MAIN();
