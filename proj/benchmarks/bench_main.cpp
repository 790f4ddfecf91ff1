#include <benchmark/benchmark.h>

#include "circstab/census.hpp"
#include "circstab/fixtures.hpp"

using namespace circstab;

static void BM_MultiplierApply(benchmark::State& state) {
  const Multiplier m(48, 7);
  std::uint64_t bits = 0x0123456789abULL & modulus_mask(48);
  for (auto _ : state) {
    bits = m.apply(bits);
    benchmark::DoNotOptimize(bits);
  }
}
BENCHMARK(BM_MultiplierApply);

static void BM_AnalyzeCirculant(benchmark::State& state) {
  const ColoredGraph g = CirculantGraph{val8_example(4)}.to_colored();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, {.canonical = false}).group_order);
}
BENCHMARK(BM_AnalyzeCirculant);

static void BM_CanonicalCertificate(benchmark::State& state) {
  const ColoredGraph g = CirculantGraph{val8_example(4)}.to_colored();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_CanonicalCertificate);

static void BM_LayeredCover(benchmark::State& state) {
  const ColoredGraph g = double_cover(CirculantGraph{iso_translate_example(5, 2, 10)}, CoverLayout::layered);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, {.canonical = false}).group_order);
}
BENCHMARK(BM_LayeredCover);

static void BM_StabilityVerdict(benchmark::State& state) {
  const CirculantGraph x{val8_example(4)};
  const bool annotate = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(stability_verdict(x, {.annotate = annotate}).verdict);
}
BENCHMARK(BM_StabilityVerdict)->Arg(0)->Arg(1);

static void BM_EnumerateOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order(n).size());
}
BENCHMARK(BM_EnumerateOrder)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
