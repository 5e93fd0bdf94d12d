#include <benchmark/benchmark.h>

#include "ahe/action.hpp"
#include "ahe/black_holes.hpp"
#include "ahe/compactification.hpp"
#include "ahe/curvature.hpp"
#include "ahe/fg.hpp"
#include "ahe/linear_bach.hpp"

using namespace ahe;

static void BM_curvature(benchmark::State& state) {
  FamilyMetric f = ads_schwarzschild(1.0);
  double x = 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature(f.metric, x));
    x = 2.0 + (x - 2.0) * 0.5;  // keep the optimizer honest
  }
}
BENCHMARK(BM_curvature);

static void BM_fg_coefficients(benchmark::State& state) {
  FamilyMetric f = toral_black_hole(1.0);
  GeodesicCompactification comp(f, f.boundary);
  for (auto _ : state) benchmark::DoNotOptimize(fg_coefficients(comp, 3));
}
BENCHMARK(BM_fg_coefficients);

static void BM_renormalized_volume(benchmark::State& state) {
  FamilyMetric f = ads_schwarzschild(1.0);
  GeodesicCompactification comp(f, f.boundary);
  for (auto _ : state) benchmark::DoNotOptimize(volume_expansion_fit(comp));
}
BENCHMARK(BM_renormalized_volume);

static void BM_masses_for_beta(benchmark::State& state) {
  double beta = 3.0;
  for (auto _ : state) benchmark::DoNotOptimize(masses_for_beta(1.0, beta));
}
BENCHMARK(BM_masses_for_beta);

static void BM_bach_kernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernel_dimensions());
}
BENCHMARK(BM_bach_kernel);

BENCHMARK_MAIN();
