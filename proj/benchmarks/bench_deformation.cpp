#include <benchmark/benchmark.h>

#include "septet/atlas.hpp"
#include "septet/deformation.hpp"

using namespace septet;

namespace {

Configuration far_heptagon() {
  return Configuration({HomPoint(Vec3{57, 35, 1}), HomPoint(Vec3{-87, 98, 1}), HomPoint(Vec3{21, 65, 1}),
                        HomPoint(Vec3{-91, 81, 1}), HomPoint(Vec3{72, -45, 1}), HomPoint(Vec3{-65, -37, 1}),
                        HomPoint(Vec3{-52, -40, 1})});
}

void BM_WallEvents(benchmark::State& state) {
  LinearPath path(builtin_seed("hept7").configuration, far_heptagon());
  for (auto _ : state) benchmark::DoNotOptimize(wall_events(path));
}
BENCHMARK(BM_WallEvents)->Unit(benchmark::kMillisecond);

void BM_FindQPath(benchmark::State& state) {
  const auto& a = builtin_seed("hept7").configuration;
  Configuration b = far_heptagon();
  for (auto _ : state) benchmark::DoNotOptimize(find_q_path(a, b, 1500, 7));
}
BENCHMARK(BM_FindQPath)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
