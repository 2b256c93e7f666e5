#include <benchmark/benchmark.h>

#include "nlqed/transition.hpp"

using namespace nlqed;

static void BM_HydrogenicOrbital(benchmark::State& state) {
  for (auto _ : state) {
    auto orb = OrbitalState::hydrogenic(3, 1, 0, 1.0, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(orb.norm_squared());
  }
}
BENCHMARK(BM_HydrogenicOrbital)->Arg(512)->Arg(2048);

static void BM_AngularReduction(benchmark::State& state) {
  const PolarizationExpansion expansion;
  for (auto _ : state) {
    benchmark::DoNotOptimize(angular_integral(2, 1, 5, 1, 3, expansion));
  }
}
BENCHMARK(BM_AngularReduction);

static void BM_AngularQuadrature(benchmark::State& state) {
  const PolarizationExpansion expansion;
  AngularOptions opts;
  opts.method = AngularMethod::quadrature;
  opts.theta_nodes = static_cast<int>(state.range(0));
  opts.phi_nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(angular_integral(2, 1, 5, 1, 3, expansion, opts));
  }
}
BENCHMARK(BM_AngularQuadrature)->Arg(32)->Arg(48);

static void BM_RadialDipole(benchmark::State& state) {
  const auto a = OrbitalState::hydrogenic(1, 0, 0);
  const auto b = OrbitalState::hydrogenic(2, 0, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_dipole_integral(b, a));
  }
}
BENCHMARK(BM_RadialDipole);

BENCHMARK_MAIN();
