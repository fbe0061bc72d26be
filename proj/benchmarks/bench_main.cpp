#include <benchmark/benchmark.h>

#include "unitcircle/chebyshev.hpp"
#include "unitcircle/circle.hpp"
#include "unitcircle/extremal.hpp"
#include "unitcircle/regions.hpp"

namespace uc = unitcircle;

static void BM_SturmCount(benchmark::State& state) {
  const uc::Polynomial p = uc::chebyshev_u(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uc::sturm_count(p, -1, 1));
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ExtremalOnCircle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const uc::Polynomial p = uc::build_p(uc::extremal_gamma(n, 2));
  for (auto _ : state) benchmark::DoNotOptimize(uc::all_zeros_on_unit_circle(p).all_on_circle);
}
BENCHMARK(BM_ExtremalOnCircle)->Arg(5)->Arg(11)->Arg(20)->Arg(40);

static void BM_ClassifyPoint(benchmark::State& state) {
  const std::vector<uc::Rational> tail{uc::ratio(37, 50), uc::ratio(-13, 50)};
  for (auto _ : state) benchmark::DoNotOptimize(uc::classify_point(11, tail));
}
BENCHMARK(BM_ClassifyPoint);

static void BM_ClassifyGrid(benchmark::State& state) {
  const auto lattice = uc::default_lattice(11, 2, uc::ratio(1, state.range(0)));
  uc::RegionOptions opt;
  opt.tau_samples = 100;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(uc::classify_grid(11, 2, lattice, opt).grid.size());
}
BENCHMARK(BM_ClassifyGrid)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_DerivativeExplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uc::u_derivative_explicit(n, n / 2));
}
BENCHMARK(BM_DerivativeExplicit)->Arg(10)->Arg(25)->Arg(40);
BENCHMARK_MAIN();
