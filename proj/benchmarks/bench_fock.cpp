#include <benchmark/benchmark.h>

#include "nlqed/fock.hpp"

using namespace nlqed;

static void BM_ApplyLadderPair(benchmark::State& state) {
  const int order = 2;
  const auto trunc = static_cast<int>(state.range(0));
  const ModeGroup group("g", order, 1.0);
  auto s = FockVector::basis(group, trunc, trunc / 2 - (trunc / 2) % order);
  for (auto _ : state) {
    auto up = apply_create_n(s);
    auto down = apply_annihilate_n(up);
    benchmark::DoNotOptimize(down.norm_squared());
  }
}
BENCHMARK(BM_ApplyLadderPair)->Arg(64)->Arg(512)->Arg(4096);

static void BM_DenseMatrix(benchmark::State& state) {
  const ModeGroup group("g", 3, 1.0);
  const auto trunc = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = dense_matrix({group, LadderKind::annihilate}, trunc);
    benchmark::DoNotOptimize(m.sum());
  }
}
BENCHMARK(BM_DenseMatrix)->Arg(64)->Arg(256);

static void BM_CommutatorDefect(benchmark::State& state) {
  const auto trunc = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto d = commutator_defect(2, trunc);
    benchmark::DoNotOptimize(d.cwiseAbs().maxCoeff());
  }
}
BENCHMARK(BM_CommutatorDefect)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
