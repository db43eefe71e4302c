#include <benchmark/benchmark.h>

#include "septet/atlas.hpp"
#include "septet/exact_geometry.hpp"

using namespace septet;

namespace {

const Configuration& hept7() { return builtin_seed("hept7").configuration; }

void BM_Orient3(benchmark::State& state) {
  const auto& c = hept7();
  for (auto _ : state) benchmark::DoNotOptimize(orient3(c[0], c[2], c[5]));
}
BENCHMARK(BM_Orient3);

void BM_Coconic6(benchmark::State& state) {
  const auto& c = hept7();
  std::array<HomPoint, 6> six{c[0], c[1], c[2], c[3], c[4], c[5]};
  for (auto _ : state) benchmark::DoNotOptimize(coconic6(six));
}
BENCHMARK(BM_Coconic6);

void BM_ConicThrough5(benchmark::State& state) {
  const auto& c = hept7();
  std::array<HomPoint, 5> five{c[0], c[1], c[2], c[3], c[4]};
  for (auto _ : state) benchmark::DoNotOptimize(conic_through5(five));
}
BENCHMARK(BM_ConicThrough5);

void BM_CheckTypicality(benchmark::State& state) {
  const auto& c = hept7();
  for (auto _ : state) benchmark::DoNotOptimize(check_typicality(c));
}
BENCHMARK(BM_CheckTypicality);

}  // namespace
