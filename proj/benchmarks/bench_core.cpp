// Microbenchmarks for the construction-heavy paths: curve assembly, operator
// and splitting assembly, prescribed metrics, verification defects and one
// geodesic descent sweep.
#include <benchmark/benchmark.h>

#include <memory>

#include "curvemetrics/metric.hpp"
#include "curvemetrics/path.hpp"
#include "curvemetrics/recipe.hpp"
#include "curvemetrics/rng.hpp"

using namespace curvemetrics;

namespace {

DiscreteCurve circle(double r, Eigen::Index n) {
  const Eigen::ArrayXd th = theta_grid(n);
  return make_curve(r * th.cos(), r * th.sin());
}

std::shared_ptr<const DiscreteCurve> shared_circle(Eigen::Index n) {
  return std::make_shared<const DiscreteCurve>(circle(1.0, n));
}

TangentField random_field(Eigen::Index n, std::uint32_t seed) {
  RandomStream stream(seed);
  return random_tangent_field(n, stream, 4);
}

void BM_MakeCurve(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const Eigen::ArrayXd th = theta_grid(n);
  const Eigen::ArrayXd x = (1.0 + 0.2 * (3.0 * th).cos()) * th.cos();
  const Eigen::ArrayXd y = (1.0 + 0.2 * (3.0 * th).cos()) * th.sin();
  for (auto _ : state) benchmark::DoNotOptimize(make_curve(x, y));
}
BENCHMARK(BM_MakeCurve)->Arg(128)->Arg(256)->Arg(512);

void BM_SolveB(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  const ScalarField a(theta_grid(n).cos());
  for (auto _ : state) benchmark::DoNotOptimize(solve_b(*c, a));
}
BENCHMARK(BM_SolveB)->Arg(128)->Arg(256)->Arg(512);

void BM_SobolevAssembly(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  for (auto _ : state) benchmark::DoNotOptimize(sobolev_operator(c, 2, {1.0, 0.5, 0.25}));
}
BENCHMARK(BM_SobolevAssembly)->Arg(128)->Arg(256)->Arg(512);

void BM_TanNorAssembly(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  for (auto _ : state) benchmark::DoNotOptimize(tan_nor_splitting(c));
}
BENCHMARK(BM_TanNorAssembly)->Arg(128)->Arg(256)->Arg(512);

void BM_Arc0Assembly(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  for (auto _ : state) benchmark::DoNotOptimize(arc0_splitting(c));
}
BENCHMARK(BM_Arc0Assembly)->Arg(128)->Arg(256)->Arg(512);

void BM_PrescribedMetric(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  const Splitting s = tan_nor_splitting(c);
  const LinOp lt = sobolev_operator(c, 1, {1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(prescribed_splitting_metric(c, s, lt));
}
BENCHMARK(BM_PrescribedMetric)->Arg(128)->Arg(256);

void BM_OrthogonalityDefect(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  const Splitting s = tan_nor_splitting(c);
  const Metric g = prescribed_splitting_metric(c, s, sobolev_operator(c, 1, {1.0, 1.0}));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_defect(g, s));
}
BENCHMARK(BM_OrthogonalityDefect)->Arg(128)->Arg(256);

void BM_MetricEval(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  auto c = shared_circle(n);
  const Metric g = metric_from_operator(c, sobolev_operator(c, 1, {1.0, 1.0}));
  const TangentField h = random_field(n, 1), k = random_field(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(eval(g, h, k));
}
BENCHMARK(BM_MetricEval)->Arg(128)->Arg(256)->Arg(512);

void BM_GeodesicSweep(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const DiscreteCurve a = circle(1.0, n), b = circle(1.2, n);
  const OperatorBuilder flat = recipe_builder(parse_recipe("l2"));
  GeodesicOptions opts;
  opts.max_iters = 1;  // one full descent sweep over the interior nodes
  for (auto _ : state)
    benchmark::DoNotOptimize(horizontal_geodesic(a, b, 16, flat, "tan_nor", opts));
}
BENCHMARK(BM_GeodesicSweep)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
