#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mimem/maxwell1d.hpp"
#include "mimem/maxwell2d.hpp"
#include "mimem/operators.hpp"

namespace {

using namespace mimem;

void BM_Grad2dMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SparseMatrix g = grad2d(2, n, 1.0 / n, n, 1.0 / n);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(g.cols());
  for (double& v : x) v = dist(rng);
  std::vector<double> y;
  for (auto _ : state) {
    g.apply_into(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.nnz()));
}
BENCHMARK(BM_Grad2dMatvec)->Arg(50)->Arg(100)->Arg(200);

void BM_Operator2dAssembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SparseMatrix g = grad2d(2, n, 1.0 / n, n, 1.0 / n);
    benchmark::DoNotOptimize(g.nnz());
  }
}
BENCHMARK(BM_Operator2dAssembly)->Arg(100);

void BM_Step1d(benchmark::State& state) {
  Scenario1D sc = build_scenario_sullivan_1d();
  const SparseMatrix d = div1d(2, sc.m, 1.0);
  const SparseMatrix g = grad1d(2, sc.m, 1.0);
  const auto [ca, cb] = material_vectors(sc);
  MimeticState1D s = make_state_1d(sc.m);
  long n = 0;
  for (auto _ : state) {
    step_1d(s, ca, cb, d, g, sc, ++n);
    benchmark::DoNotOptimize(s.ex.data());
  }
}
BENCHMARK(BM_Step1d);

void BM_Run2dUpml(benchmark::State& state) {
  Scenario2D sc = build_scenario_sullivan_2d_upml();
  sc.steps = state.range(0);
  sc.snapshot_steps.clear();
  for (auto _ : state) {
    MimeticState2D s = run_2d(sc);
    benchmark::DoNotOptimize(s.e.data());
  }
}
BENCHMARK(BM_Run2dUpml)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
