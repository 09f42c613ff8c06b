#include <benchmark/benchmark.h>

#include <random>

#include "eulermerge/merge_engine.hpp"
#include "eulermerge/planarity.hpp"

namespace em = eulermerge;

namespace {

em::SetSystem random_system(std::uint64_t seed, int sets, int elements) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution member(0.3);
  em::SetMap map;
  for (int s = 0; s < sets; ++s) {
    auto& e = map["s" + std::to_string(s)];
    for (int u = 0; u < elements; ++u)
      if (member(rng)) e.insert("u" + std::to_string(u));
    if (e.empty()) e.insert("u0");
  }
  return em::SetSystem::from_sets(std::move(map));
}

void BM_InitialDualGraph(benchmark::State& state) {
  auto system = random_system(1, static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(em::initial_dual_graph(system));
}
BENCHMARK(BM_InitialDualGraph)->Arg(4)->Arg(8)->Arg(12);

void BM_EulerMerge(benchmark::State& state) {
  auto system = random_system(2, static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(em::euler_merge(system));
}
BENCHMARK(BM_EulerMerge)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RunningExample(benchmark::State& state) {
  auto system = em::load_set_system(EULERMERGE_DATA_DIR "/running_example.txt");
  for (auto _ : state) benchmark::DoNotOptimize(em::euler_merge(system));
}
BENCHMARK(BM_RunningExample)->Unit(benchmark::kMillisecond);

void BM_SouthernWomen(benchmark::State& state) {
  auto system = em::load_set_system(EULERMERGE_DATA_DIR "/southern_women.txt");
  em::EulerMergeOptions options{state.range(0) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(em::euler_merge(system, options));
}
BENCHMARK(BM_SouthernWomen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Planarity(benchmark::State& state) {
  auto g = em::initial_dual_graph(random_system(3, static_cast<int>(state.range(0)), 60));
  for (auto _ : state) benchmark::DoNotOptimize(em::is_planar(g));
  state.counters["zones"] = static_cast<double>(g.zone_count());
}
BENCHMARK(BM_Planarity)->Arg(6)->Arg(10)->Arg(14);

}  // namespace
