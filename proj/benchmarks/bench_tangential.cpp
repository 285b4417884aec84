#include <benchmark/benchmark.h>

#include "slopepoly/slopepoly.hpp"

using namespace slopepoly;

namespace {

std::vector<SlopeSystem> systems(std::size_t n) {
  std::vector<SlopeSystem> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    auto rng = trial_rng(7, i);
    out.push_back(random_slope_system(rng, n));
  }
  return out;
}

void BM_BuildChart(benchmark::State& state) {
  const auto input = systems(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_chart(input[i++ % input.size()]));
}
BENCHMARK(BM_BuildChart)->DenseRange(4, 12, 4);

void BM_CriticalPoints(benchmark::State& state) {
  const auto input = systems(static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tangential_critical_points(input[i++ % input.size()]));
}
BENCHMARK(BM_CriticalPoints)->DenseRange(4, 12, 4);

void BM_EigenIndex(benchmark::State& state) {
  std::vector<TangentialCritical> points;
  for (const SlopeSystem& s : systems(static_cast<std::size_t>(state.range(0)))) {
    const auto cp = tangential_critical_points(s);
    if (const auto* p = std::get_if<CriticalPair>(&cp)) points.push_back(p->positive);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(morse_index_eigen(points[i++ % points.size()]));
    } catch (const GeometryError&) {
    }
  }
}
BENCHMARK(BM_EigenIndex)->DenseRange(4, 12, 4);

}  // namespace
