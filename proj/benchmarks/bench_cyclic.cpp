#include <benchmark/benchmark.h>

#include "slopepoly/slopepoly.hpp"

using namespace slopepoly;

namespace {

std::vector<CyclicPolygon> polygons(std::size_t n) {
  std::vector<CyclicPolygon> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    auto rng = trial_rng(11, i);
    out.push_back(random_cyclic_polygon(rng, n));
  }
  return out;
}

void BM_CyclicInvariants(benchmark::State& state) {
  const auto input = polygons(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_invariants(input[i++ % input.size()]));
}
BENCHMARK(BM_CyclicInvariants)->DenseRange(4, 10, 3);

void BM_AreaIndexNumeric(benchmark::State& state) {
  const auto input = polygons(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(area_morse_index_numeric(input[i++ % input.size()]));
    } catch (const GeometryError&) {
    }
  }
}
BENCHMARK(BM_AreaIndexNumeric)->DenseRange(4, 10, 3);

void BM_DualityCheck(benchmark::State& state) {
  const auto input = polygons(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(duality_index_check(input[i++ % input.size()]));
    } catch (const GeometryError&) {
    }
  }
}
BENCHMARK(BM_DualityCheck)->DenseRange(4, 10, 3);

}  // namespace
