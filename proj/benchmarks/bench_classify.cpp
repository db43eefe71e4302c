#include <benchmark/benchmark.h>

#include "septet/atlas.hpp"
#include "septet/classifier.hpp"
#include "septet/cremona.hpp"

using namespace septet;

namespace {

void BM_AdjacencyGraph(benchmark::State& state) {
  const auto& c = builtin_seed("c1222").configuration;
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_graph(c));
}
BENCHMARK(BM_AdjacencyGraph);

void BM_PolygonalSpectrum(benchmark::State& state) {
  const auto& c = builtin_seed("c1222").configuration;
  for (auto _ : state) benchmark::DoNotOptimize(polygonal_spectrum(c));
}
BENCHMARK(BM_PolygonalSpectrum);

void BM_QClass(benchmark::State& state) {
  const auto& c = builtin_seed(q_class_names()[state.range(0)]).configuration;
  for (auto _ : state) benchmark::DoNotOptimize(q_class(c));
}
BENCHMARK(BM_QClass)->DenseRange(0, 13);

void BM_CremonaOrbit(benchmark::State& state) {
  const auto& c = builtin_seed("hept7").configuration;
  for (auto _ : state) benchmark::DoNotOptimize(cremona_orbit(c));
}
BENCHMARK(BM_CremonaOrbit)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(state.range(0), 100, 1, builtin_calibration(), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Census)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
