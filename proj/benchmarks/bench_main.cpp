#include <benchmark/benchmark.h>

#include "spintensor/scene.hpp"

using namespace spintensor;

namespace {

SceneConfig conformal_config() {
  SceneConfig cfg;
  cfg.name = "bench";
  for (int i = 0; i < 4; ++i)
    for (int r = 0; r < 4; ++r) {
      cfg.frame[i][r] = i == r ? "exp(-x1)" : "0";
      cfg.metric[i][r] = i != r ? "0" : (i == 0 ? "1" : "-1");
    }
  cfg.sample_points.push_back({0.1, -0.4, 0.2, -0.3});
  return cfg;
}

void BM_CubicIdentity(benchmark::State& state) {
  const ExactEquipment eq = canonical_equipment<GaussianRational>();
  for (auto _ : state) benchmark::DoNotOptimize(check_cubic(eq));
}
BENCHMARK(BM_CubicIdentity);

void BM_CanonicalSuite(benchmark::State& state) {
  const ExactEquipment eq = canonical_equipment<GaussianRational>();
  for (auto _ : state) benchmark::DoNotOptimize(run_canonical_suite(eq));
}
BENCHMARK(BM_CanonicalSuite);

void BM_ScenePointSymbolic(benchmark::State& state) {
  const SceneConfig cfg = conformal_config();
  for (auto _ : state) benchmark::DoNotOptimize(run_verify_scene(cfg));
}
BENCHMARK(BM_ScenePointSymbolic);

void BM_ScenePointFiniteDifference(benchmark::State& state) {
  SceneConfig cfg = conformal_config();
  cfg.mode = DerivativeMode::finite_difference;
  cfg.tolerance = 1e-5;
  for (auto _ : state) benchmark::DoNotOptimize(run_verify_scene(cfg));
}
BENCHMARK(BM_ScenePointFiniteDifference);

void BM_ParseDiffEval(benchmark::State& state) {
  const Point x{0.3, -0.7, 0.1, 0.9};
  for (auto _ : state) {
    const Expr e = parse_expr("exp(-x1) * sin(x2 + x3^2) / (1 + x0^2) - 5/7 * cos(x1)");
    cplx acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += eval(differentiate(e, k), x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ParseDiffEval);

} // namespace

BENCHMARK_MAIN();
