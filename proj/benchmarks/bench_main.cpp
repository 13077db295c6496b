#include <benchmark/benchmark.h>

#include <numbers>

#include "polyharm/polyharm.hpp"

using namespace polyharm;

static void BM_Eval(benchmark::State& state) {
  const auto f = sample_member(ClassKind::convex, 3, static_cast<std::size_t>(state.range(0)), 1.0, 1);
  const Complex z{0.6, -0.3};
  for (auto _ : state) benchmark::DoNotOptimize(eval(f, z));
}
BENCHMARK(BM_Eval)->Arg(10)->Arg(32)->Arg(128);

static void BM_StarlikeCertificate(benchmark::State& state) {
  const auto f = sample_member(ClassKind::starlike, 2, 10, 1.0, 2);
  const auto grid = PolarGrid::standard();
  for (auto _ : state) benchmark::DoNotOptimize(starlike_certificate(f, grid));
}
BENCHMARK(BM_StarlikeCertificate)->Unit(benchmark::kMillisecond);

static void BM_ConvexCertificate(benchmark::State& state) {
  const auto f = sample_member(ClassKind::convex, 2, 10, 1.0, 3);
  const auto grid = PolarGrid::standard();
  for (auto _ : state) benchmark::DoNotOptimize(convex_certificate(f, grid));
}
BENCHMARK(BM_ConvexCertificate)->Unit(benchmark::kMillisecond);

static void BM_BuildClassF(benchmark::State& state) {
  const HerglotzMeasure mu({{0.3, 0.25}, {1.7, 0.5}, {4.0, 0.25}});
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_class_f(mu, 0.5, order));
}
BENCHMARK(BM_BuildClassF)->Arg(10)->Arg(256);

static void BM_AngleSearch(benchmark::State& state) {
  const auto f = catalog::f4(10);
  const auto grid = PolarGrid::standard();
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem7_search(f, steps, grid));
}
BENCHMARK(BM_AngleSearch)->Arg(36)->Arg(180)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
