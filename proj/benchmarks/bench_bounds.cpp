#include <benchmark/benchmark.h>

#include "delaybounds/instance.hpp"
#include "delaybounds/moments.hpp"
#include "delaybounds/relations.hpp"
#include "delaybounds/single_interval.hpp"
#include "delaybounds/two_interval.hpp"
#include "delaybounds/weight_blocks.hpp"

using namespace delaybounds;

namespace {

InstanceConfig bench_config(int n, int nu) {
  InstanceConfig cfg;
  cfg.n = n;
  cfg.nu = nu;
  cfg.seed = 424242;
  cfg.degree = 4;
  return cfg;
}

void BM_BuildBasis(benchmark::State& state) {
  const Space s = Space::continuous(-0.7, 2.3);
  const int nu = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Basis::build(s, nu));
  }
}
BENCHMARK(BM_BuildBasis)->Arg(1)->Arg(3)->Arg(6);

void BM_ExactEnergy(benchmark::State& state) {
  const Instance inst = random_instance(bench_config(4, 3), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_energy(inst.d0, inst.f, inst.w));
  }
}
BENCHMARK(BM_ExactEnergy);

void BM_PsdCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  TrialRng rng(1, 7);
  const Matrix a = rng.spd(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_check(a));
  }
}
BENCHMARK(BM_PsdCheck)->Arg(16)->Arg(68)->Arg(132);

void BM_GfmbBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int nu = static_cast<int>(state.range(1));
  const Instance inst = random_instance(bench_config(n, nu), 0);
  TrialRng rng(2, 0);
  const int m1 = (nu + 1) * n;
  const PsiMatrix psi = random_feasible_psi(rng, nu, m1, inst.w);
  const Vector chi = rng.vector(m1);
  const MomentVector mv = moments(inst.d0, inst.b0, inst.f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gfmb_bound(psi, inst.b0.rho(), chi, mv.half(Half::first)));
  }
}
BENCHMARK(BM_GfmbBound)->Args({2, 1})->Args({4, 3});

void BM_BbiBound(benchmark::State& state) {
  const Instance inst = random_instance(bench_config(4, 3), 0);
  const MomentVector mv = moments(inst.d0, inst.b0, inst.f);
  const WeightBlocks wb(inst.b0.rho(), inst.w);
  const Vector w = mv.stacked();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bbi_bound(w, wb.cal()));
  }
}
BENCHMARK(BM_BbiBound);

void BM_OmegaSerc(benchmark::State& state) {
  TrialRng rng(3, 0);
  const WeightLadder wl(3, rng.spd(4));
  const int m1 = wl.m1();
  const SercParams p{rng.matrix(m1, m1), rng.matrix(m1, m1)};
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(omega_serc(g, p, wl));
  }
}
BENCHMARK(BM_OmegaSerc);

void BM_CounterexampleSearchB(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(counterexample_search(SearchKind::B, 7, 10000));
  }
}
BENCHMARK(BM_CounterexampleSearchB);

}  // namespace

BENCHMARK_MAIN();
