#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "wdrkit/census.hpp"
#include "wdrkit/families.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/scheme.hpp"

using namespace wdrkit;

namespace {

// Γ_{q,2q,1} has 2q^2 vertices
Digraph qsk_c1(int q) { return gamma_qsk(GammaQskParams::make(q, 2 * q, 1)); }

void BM_DistancePairs(benchmark::State& state) {
  const auto d = qsk_c1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(distance_pairs(d));
  state.counters["n"] = static_cast<double>(d.vertex_count());
}
BENCHMARK(BM_DistancePairs)->DenseRange(3, 9, 2);

void BM_AnalyzeWdr(benchmark::State& state) {
  const auto d = qsk_c1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
  state.counters["n"] = static_cast<double>(d.vertex_count());
}
BENCHMARK(BM_AnalyzeWdr)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_AnalyzeNotWdr(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const auto d = gamma_qsk(GammaQskParams::make(q, 2 * q + 1, q));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
}
BENCHMARK(BM_AnalyzeNotWdr)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_AreIsomorphicShuffled(benchmark::State& state) {
  const auto d = qsk_c1(static_cast<int>(state.range(0)));
  std::vector<Vertex> perm(d.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::mt19937 rng(5);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto shuffled = relabel(d, perm);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(d, shuffled));
}
BENCHMARK(BM_AreIsomorphicShuffled)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_VertexTransitive(benchmark::State& state) {
  const auto d = qsk_c1(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_vertex_transitive(d));
}
BENCHMARK(BM_VertexTransitive)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  CensusSpec spec;
  spec.max_order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(spec));
}
BENCHMARK(BM_Census)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
