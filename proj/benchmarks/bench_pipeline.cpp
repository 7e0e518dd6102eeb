#include <benchmark/benchmark.h>

#include "ttk/invariants.hpp"
#include "ttk/oracle.hpp"

using namespace ttk;

namespace {

TwistedTorusParams knot(const benchmark::State& state) {
  return make_params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                     state.range(2) > 0 ? Sign::Plus : Sign::Minus, static_cast<int>(state.range(3)),
                     static_cast<int>(state.range(4)));
}

void knots(benchmark::internal::Benchmark* b) {
  b->Args({3, 1, 1, 2, 2})->Args({4, 1, 1, 2, 1})->Args({5, 2, 1, 3, 2})->Args({6, 2, -1, 4, 2});
  b->Unit(benchmark::kMillisecond);
}

void BM_BuildDiagram(benchmark::State& state) {
  const auto params = knot(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_diagram(params));
}
BENCHMARK(BM_BuildDiagram)->Apply(knots);

void BM_EnumerateBigons(benchmark::State& state) {
  const GenusOneDiagram d = build_diagram(knot(state));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bigons(d));
  state.counters["generators"] = static_cast<double>(d.intersection_count());
}
BENCHMARK(BM_EnumerateBigons)->Apply(knots);

void BM_ComplexAndClassify(benchmark::State& state) {
  const GenusOneDiagram d = build_diagram(knot(state));
  const auto bigons = enumerate_bigons(d);
  for (auto _ : state) {
    const KnotComplex c = build_complex(d, bigons);
    benchmark::DoNotOptimize(classify(c));
  }
}
BENCHMARK(BM_ComplexAndClassify)->Apply(knots);

void BM_Burau(benchmark::State& state) {
  const BraidWord w = braid_word(knot(state));
  for (auto _ : state) benchmark::DoNotOptimize(burau_alexander(w));
}
BENCHMARK(BM_Burau)->Apply(knots);

}  // namespace

BENCHMARK_MAIN();
