#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fracrsv/history_kernels.hpp"
#include "fracrsv/seirs.hpp"
#include "fracrsv/solvers.hpp"
#include "fracrsv/weights.hpp"

using namespace fracrsv;

namespace {

std::vector<double> history(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> h(n * d);
  for (auto& v : h) v = u(rng);
  return h;
}

template <kernels::Execution Mode>
void BM_HistorySum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  constexpr std::size_t d = 4;
  const auto hist = history(n, d);
  const auto w = trap_weights(0.995, n);
  std::vector<double> acc(d);
  for (auto _ : state) {
    kernels::weighted_history(Mode, w.by_lag(), hist, d, n - 1, 1, n - 1, acc);
    benchmark::DoNotOptimize(acc.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <kernels::Execution Mode>
void BM_PeceSolve(benchmark::State& state) {
  const SeirsParams p = florida_default();
  const FractionalSolver solver(make_grid(p.alpha, 5.0, static_cast<std::size_t>(state.range(0))), {Mode});
  const VectorField f = state_field(p);
  const auto y0 = florida_initial_state().as_array();
  for (auto _ : state) benchmark::DoNotOptimize(solver.pece(f, y0));
}

}  // namespace

BENCHMARK(BM_HistorySum<kernels::Execution::Serial>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_HistorySum<kernels::Execution::Parallel>)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->UseRealTime();
BENCHMARK(BM_PeceSolve<kernels::Execution::Serial>)->Arg(400)->Arg(1600)->Arg(6400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PeceSolve<kernels::Execution::Parallel>)
    ->Arg(400)
    ->Arg(1600)
    ->Arg(6400)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
