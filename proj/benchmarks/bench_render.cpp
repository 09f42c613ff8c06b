#include <benchmark/benchmark.h>

#include "eulermerge/merge_engine.hpp"
#include "eulermerge/render.hpp"
#include "eulermerge/svg.hpp"

namespace em = eulermerge;

namespace {

em::DualGraph final_graph(const char* file) {
  return em::euler_merge(em::load_set_system(std::string(EULERMERGE_DATA_DIR "/") + file)).graph;
}

void BM_PlanarLayout(benchmark::State& state) {
  auto g = final_graph("southern_women.txt");
  for (auto _ : state) benchmark::DoNotOptimize(em::planar_layout(g));
}
BENCHMARK(BM_PlanarLayout)->Unit(benchmark::kMillisecond);

void BM_RefineLayout(benchmark::State& state) {
  auto g = final_graph("southern_women.txt");
  auto start = em::planar_layout(g);
  em::RefineOptions options;
  options.iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(em::refine_layout(g, start, options));
}
BENCHMARK(BM_RefineLayout)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_RouteAndSmooth(benchmark::State& state) {
  auto g = final_graph("running_example.txt");
  auto layout = em::refine_layout(g, em::planar_layout(g));
  for (auto _ : state) benchmark::DoNotOptimize(em::smooth_curves(em::route_curves(g, layout)));
}
BENCHMARK(BM_RouteAndSmooth)->Unit(benchmark::kMillisecond);

void BM_EmitSvg(benchmark::State& state) {
  auto g = final_graph("running_example.txt");
  auto d = em::smooth_curves(em::route_curves(g, em::refine_layout(g, em::planar_layout(g))));
  for (auto _ : state) benchmark::DoNotOptimize(em::emit_svg(d));
}
BENCHMARK(BM_EmitSvg);

}  // namespace

BENCHMARK_MAIN();
