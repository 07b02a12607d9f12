#include <benchmark/benchmark.h>

#include "filtforge/comparison.hpp"
#include "filtforge/corpus.hpp"
#include "filtforge/kernels.hpp"
#include "filtforge/synthesis.hpp"

using namespace filtforge;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_Induce1D(benchmark::State& state) {
  const auto space = corpus::random_space(1, 4000, 2);
  const auto f = corpus::random_stable_filtration(1, space, 12).filtration;
  for (auto _ : state) benchmark::DoNotOptimize(induce_1d(f, mode(state)));
}
BENCHMARK(BM_Induce1D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CircleCorrespondence(benchmark::State& state) {
  const auto pair = corpus::circle_pair(256);
  const auto a = induce_1d(pair.a);
  const auto b = induce_1d(pair.b);
  for (auto _ : state) benchmark::DoNotOptimize(pseudo_distance_cycle(pair.a.space(), a, b, mode(state)));
}
BENCHMARK(BM_CircleCorrespondence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PointNeighbors(benchmark::State& state) {
  const auto f = corpus::exastab_b(0.02);
  const auto& pts = f.space().points();
  for (auto _ : state) {
    if (state.range(0) == 0)
      benchmark::DoNotOptimize(kernels::neighbors_points_serial(pts, f.space().resolution()));
    else
      benchmark::DoNotOptimize(kernels::neighbors_points_omp(pts, f.space().resolution()));
  }
}
BENCHMARK(BM_PointNeighbors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Geodesic(benchmark::State& state) {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) pts.push_back({i * 0.1, j * 0.1});
  SpaceOptions options;
  options.exec = mode(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(SampledSpace::from_points(pts, 0.1 * (1 + 1e-9), Metric::geodesic, options));
}
BENCHMARK(BM_Geodesic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
