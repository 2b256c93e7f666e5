#include <benchmark/benchmark.h>

#include "nlqed/constants.hpp"
#include "nlqed/dynamics.hpp"

using namespace nlqed;

namespace {
FewLevelSystem resonant_two_level(double intensity) {
  Eigen::MatrixXd d(2, 2);
  d << 0.0, 1.0, 1.0, 0.0;
  return FewLevelSystem({0.0, 3.10}, d, 2, ModeGroup("drive", 2, ev_to_omega(1.55)), intensity);
}
}  // namespace

static void BM_EvolveRabiPeriods(benchmark::State& state) {
  const auto sys = resonant_two_level(1e18);
  const double g = sys.coupling_rate(0, 1);
  const double period = 3.141592653589793 / g;
  const auto periods = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto traj = evolve(sys, periods * period, period / 100.0);
    benchmark::DoNotOptimize(traj.populations.sum());
  }
}
BENCHMARK(BM_EvolveRabiPeriods)->Arg(1)->Arg(10);

static void BM_ScalingExperiment(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(std::pow(10.0, 16.0 + 3.0 * i / 7.0));
  const auto probe = resonant_two_level(grid.back());
  const double t_probe = 0.02 * 3.141592653589793 / probe.coupling_rate(0, 1);
  for (auto _ : state) {
    auto fit = scaling_experiment(resonant_two_level(0.0), grid, t_probe);
    benchmark::DoNotOptimize(fit.slope);
  }
}
BENCHMARK(BM_ScalingExperiment);

BENCHMARK_MAIN();
