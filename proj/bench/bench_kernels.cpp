// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "plh/holder.hpp"
#include "plh/spatial.hpp"
#include "plh/verify.hpp"

using namespace plh;

namespace {

Complex2D jittered_grid(int n, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  Complex2D c;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      Point2 p{double(i) / n, double(j) / n};
      if (i > 0 && j > 0 && i < n && j < n) p = p + Point2{u(g) / n, u(g) / n};
      c.vertices.push_back(p);
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int32_t v = j * (n + 1) + i;
      c.triangles.push_back({v, v + 1, v + n + 2});
      c.triangles.push_back({v, v + n + 2, v + n + 1});
    }
  c.edges = edges_from_triangles(c.triangles);
  return c;
}

Point2 wavy(Point2 p) { return p + 0.05 * Point2{std::sin(3 * p.y), std::sin(3 * p.x)}; }

void BM_ImproperPairsGrid(benchmark::State& st) {
  Complex2D c = jittered_grid(int(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(improper_triangle_pairs(c.vertices, c.triangles, 1e-12));
  st.SetItemsProcessed(st.iterations() * int64_t(c.triangles.size()));
}

void BM_ImproperPairsAllPairs(benchmark::State& st) {
  Complex2D c = jittered_grid(int(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(improper_triangle_pairs_serial(c.vertices, c.triangles, 1e-12));
  st.SetItemsProcessed(st.iterations() * int64_t(c.triangles.size()));
}

void BM_SupDistance(benchmark::State& st) {
  Complex2D c = jittered_grid(int(st.range(0)), 2);
  PLMap f{c, c.vertices};
  for (auto _ : st) benchmark::DoNotOptimize(sup_distance_ex(f, wavy, 4));
}

void BM_SupDistanceSerial(benchmark::State& st) {
  Complex2D c = jittered_grid(int(st.range(0)), 2);
  PLMap f{c, c.vertices};
  for (auto _ : st) benchmark::DoNotOptimize(sup_distance_serial(f, wavy, 4));
}

std::vector<PointPair> pairs(int n) {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<PointPair> v;
  for (int k = 0; k < n; ++k) v.push_back({{u(g), u(g)}, {u(g), u(g)}});
  return v;
}

void BM_Seminorm(benchmark::State& st) {
  auto p = pairs(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(holder_seminorm_lower_bound(wavy, 0.5, p));
}

void BM_SeminormSerial(benchmark::State& st) {
  auto p = pairs(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(holder_seminorm_lower_bound_serial(wavy, 0.5, p));
}

}  // namespace

BENCHMARK(BM_ImproperPairsGrid)->Arg(16)->Arg(32)->Arg(256);
BENCHMARK(BM_ImproperPairsAllPairs)->Arg(16)->Arg(32);
BENCHMARK(BM_SupDistance)->Arg(64)->Arg(256);
BENCHMARK(BM_SupDistanceSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_Seminorm)->Arg(100000);
BENCHMARK(BM_SeminormSerial)->Arg(100000);

BENCHMARK_MAIN();
