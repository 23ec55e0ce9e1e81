#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "psurg/knot.hpp"
#include "psurg/perturbation.hpp"
#include "psurg/pillowcase.hpp"
#include "psurg/rep_solver.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<psurg::AnglePair> pts(1024);
  for (auto& p : pts) p = {u(rng), u(rng)};
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& p = pts[i++ & 1023];
    benchmark::DoNotOptimize(psurg::canonicalize(p.alpha, p.beta));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_SolveAtAlpha(benchmark::State& state) {
  const auto k = psurg::torus_knot_presentation(2, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psurg::solve_at_alpha(k, 0.55 * kPi, 16, 7));
  }
}
BENCHMARK(BM_SolveAtAlpha)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PillowcaseImage(benchmark::State& state) {
  const auto k = psurg::named_knot("figure-eight");
  for (auto _ : state) {
    benchmark::DoNotOptimize(psurg::pillowcase_image(k, static_cast<int>(state.range(0)), 1));
  }
}
BENCHMARK(BM_PillowcaseImage)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ConstructG(benchmark::State& state) {
  const psurg::Tube tube{psurg::ArcS(psurg::Slope(1, 1)), 0.15};
  for (auto _ : state) benchmark::DoNotOptimize(psurg::construct_g(tube));
}
BENCHMARK(BM_ConstructG)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
BENCHMARK_MAIN();
