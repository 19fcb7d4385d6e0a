#include <benchmark/benchmark.h>

#include "exsym/exsym.hpp"

using namespace exsym;

static void BM_ValidateSphere(benchmark::State& state) {
  const auto t = sphere_triple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_triple(t).ok());
}
BENCHMARK(BM_ValidateSphere)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_ValidateSphereFloat(benchmark::State& state) {
  const auto t = to_float(sphere_triple(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(validate_triple(t).ok());
}
BENCHMARK(BM_ValidateSphereFloat)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeShape(benchmark::State& state) {
  const auto t = sphere_triple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_shape(t).tri_class);
}
BENCHMARK(BM_AnalyzeShape)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_KillingForm(benchmark::State& state) {
  const auto t = sphere_triple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(killing_form(t.alg()));
}
BENCHMARK(BM_KillingForm)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_DecomposeSum(benchmark::State& state) {
  const auto t = direct_sum(sphere_triple(1), direct_sum(flat_triple(1), sl2_triple()));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(t).blocks.size());
}
BENCHMARK(BM_DecomposeSum)->Unit(benchmark::kMillisecond);

static void BM_Search(benchmark::State& state) {
  SearchOptions o;
  o.dims = {3, 0, 3};
  o.seed = 7;
  o.require_nonzero_a_h = true;
  for (auto _ : state) benchmark::DoNotOptimize(search_nilpotent_instance(o).has_value());
}
BENCHMARK(BM_Search)->Unit(benchmark::kMillisecond);

static void BM_SurveyE2(benchmark::State& state) {
  auto imm = builtin("E2");
  imm.diff.use_closed_form = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(survey(imm).max_nabla_alpha);
}
BENCHMARK(BM_SurveyE2)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_OrbitPoint(benchmark::State& state) {
  const auto chart = make_orbit_chart(sphere_triple(2), sphere_triple(2).grading()[Part::PlusMinus].vector(0));
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chart.point(s));
    s += 0.01;
  }
}
BENCHMARK(BM_OrbitPoint);

BENCHMARK_MAIN();
