#include <benchmark/benchmark.h>

#include <random>

#include "generators.hpp"
#include "tropjac/abgroup.hpp"
#include "tropjac/tropical_jacobian.hpp"

using namespace tropjac;
using namespace tropjac::testing;

static void BM_SmithInvariants(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_SmithWithTransforms(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(rng, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithWithTransforms)->Arg(8)->Arg(16)->Arg(32);

static MetricGraph dense_graph(std::size_t vertices, std::size_t extra, long max_length) {
  std::mt19937 rng(3);
  for (;;) {
    MetricGraph g = random_graph_over_n(rng, vertices, max_length, extra);
    if (g.vertex_count() == vertices) return g;
  }
}

static void BM_TroJacOverN(benchmark::State& state) {
  MetricGraph g = dense_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(trojac(g));
}
BENCHMARK(BM_TroJacOverN)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_TroJacOverN3(benchmark::State& state) {
  std::mt19937 rng(4);
  const SharpFsMonoid n3 = SharpFsMonoid::free(3);
  const auto size = static_cast<std::size_t>(state.range(0));
  MetricGraph g = random_graph(rng, n3, size, size, [](std::mt19937& r) { return random_free_length(r, 3); });
  for (auto _ : state) benchmark::DoNotOptimize(trojac(g));
}
BENCHMARK(BM_TroJacOverN3)->Arg(4)->Arg(8)->Arg(16);

static void BM_CriticalGroupOfUnitSubdivision(benchmark::State& state) {
  MetricGraph g = unit_subdivision(dense_graph(8, 4, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_group(g));
}
BENCHMARK(BM_CriticalGroupOfUnitSubdivision)->Arg(3)->Arg(9)->Arg(20);
BENCHMARK_MAIN();
