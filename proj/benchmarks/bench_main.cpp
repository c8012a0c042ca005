#include "alexandrov/builders.hpp"
#include "alexandrov/correspondence.hpp"
#include "alexandrov/geodesics.hpp"
#include "alexandrov/polyhedron.hpp"
#include "alexandrov/retriangulation.hpp"
#include "alexandrov/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace alexandrov;

namespace {

ConeMetric hull_metric(int n, std::uint64_t seed) {
  Rng rng(seed);
  return iota(canonicalize_polyhedron(random_sphere_points(n, rng)));
}

ConeMetric unit_cube() {
  std::vector<Vec3> pts;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) pts.emplace_back(x, y, z);
  return iota(canonicalize_polyhedron(pts));
}

void BM_GeodesicCubeDiagonal(benchmark::State& state) {
  const ConeMetric m = unit_cube();
  for (auto _ : state) benchmark::DoNotOptimize(shortest_geodesic(m, 0, 7).length);
}
BENCHMARK(BM_GeodesicCubeDiagonal);

void BM_GeodesicRandomHull(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ConeMetric m = hull_metric(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_geodesic(m, 0, n - 1).length);
}
BENCHMARK(BM_GeodesicRandomHull)->Arg(8)->Arg(16)->Arg(32);

void BM_DistanceMatrix(benchmark::State& state) {
  const ConeMetric m = hull_metric(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(m));
}
BENCHMARK(BM_DistanceMatrix)->Arg(6)->Arg(12);

void BM_RetriangulateSubdivided(benchmark::State& state) {
  Rng rng(13);
  const ConeMetric base = hull_metric(10, 13);
  const ConeMetric m = random_flips(random_subdivision(base, static_cast<int>(state.range(0)), rng), 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(retriangulate_essential(m).metric.edge_count());
}
BENCHMARK(BM_RetriangulateSubdivided)->Arg(4)->Arg(16)->Arg(64);

void BM_Embed4(benchmark::State& state) {
  Rng rng(14);
  const ConeMetric m = random_four_vertex_metric(rng);
  for (auto _ : state) benchmark::DoNotOptimize(embed4(m).max_residual);
}
BENCHMARK(BM_Embed4);

void BM_IotaRandomHull(benchmark::State& state) {
  Rng rng(15);
  const auto pts = random_sphere_points(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(iota(canonicalize_polyhedron(pts)).edge_count());
}
BENCHMARK(BM_IotaRandomHull)->Arg(16)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
