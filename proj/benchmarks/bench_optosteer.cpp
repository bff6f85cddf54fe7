#include <benchmark/benchmark.h>

#include "optosteer/linalg.hpp"
#include "optosteer/model.hpp"
#include "optosteer/sweep.hpp"

namespace {

using namespace optosteer;

std::pair<Matrix, Matrix> reference_system() {
  PhysicalParams p;
  p.r = 1.5;
  return {drift_matrix(p) * (1.0 / p.omega_m), diffusion_matrix(p) * (1.0 / p.omega_m)};
}

void BM_CharPolyHurwitz(benchmark::State& state) {
  const auto [a, d] = reference_system();
  for (auto _ : state) benchmark::DoNotOptimize(is_hurwitz(a));
}
BENCHMARK(BM_CharPolyHurwitz);

void BM_SolveLyapunov(benchmark::State& state) {
  const auto [a, d] = reference_system();
  for (auto _ : state) benchmark::DoNotOptimize(solve_lyapunov(a, d));
}
BENCHMARK(BM_SolveLyapunov);

void BM_OdeOracle(benchmark::State& state) {
  const auto [a, d] = reference_system();
  const double t_final = 200.0 / (140.0 / 947e3);
  for (auto _ : state) benchmark::DoNotOptimize(integrate_lyapunov_ode(a, d, t_final, default_ode_step(a)));
}
BENCHMARK(BM_OdeOracle)->Unit(benchmark::kMillisecond);

void BM_EvaluatePoint(benchmark::State& state) {
  PhysicalParams p;
  p.r = 2.25;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_point(p));
}
BENCHMARK(BM_EvaluatePoint);

void BM_FigureSweep(benchmark::State& state) {
  const auto spec = figure_preset(FigureId::fig2a);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec, threads));
}
BENCHMARK(BM_FigureSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
