// Serial reference vs OpenMP kernels, and the incremental fitness path vs a
// full recomputation. Run with OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "frogsteg/metrics.hpp"
#include "frogsteg/pixel_selector.hpp"
#include "frogsteg/textures.hpp"
#include "frogsteg/window_kernels.hpp"

using namespace frogsteg;

namespace {

struct Pair {
  RasterImage a, b;
  explicit Pair(int size) : a(textures::generate(size, size, 1)), b(textures::generate(size, size, 2)) {}
};

void BM_WindowSumsSerial(benchmark::State& state) {
  const Pair p(static_cast<int>(state.range(0)));
  const kernels::WindowGrid grid(p.a.width(), p.a.height(), 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::windowSums(p.a, p.b, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.a.sampleCount()));
}

void BM_WindowSumsOpenMP(benchmark::State& state) {
  const Pair p(static_cast<int>(state.range(0)));
  const kernels::WindowGrid grid(p.a.width(), p.a.height(), 8);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::windowSums(p.a, p.b, grid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.a.sampleCount()));
}

void BM_SquaredErrorSerial(benchmark::State& state) {
  const Pair p(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::squaredErrorSum(p.a, p.b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.a.sampleCount()));
}

void BM_SquaredErrorOpenMP(benchmark::State& state) {
  const Pair p(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::squaredErrorSum(p.a, p.b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.a.sampleCount()));
}

void BM_SequenceScoreIncremental(benchmark::State& state) {
  const auto size = static_cast<int>(state.range(0));
  const auto img = textures::generate(size, size, 3);
  SelectorConfig cfg;
  SequenceScorer scorer(img, cfg);
  const PixelSequence seq{17, 1001, img.sampleCount()};
  for (auto _ : state) benchmark::DoNotOptimize(scorer.score(seq));
}

void BM_SequenceScoreFull(benchmark::State& state) {
  const auto size = static_cast<int>(state.range(0));
  const auto img = textures::generate(size, size, 3);
  SelectorConfig cfg;
  const auto cleared = clearLsbPlane(img);
  const PixelSequence seq{17, 1001, img.sampleCount()};
  for (auto _ : state) {
    RasterImage perturbed = cleared;
    seq.forEach(img.sampleCount() / 8, [&](std::uint64_t k) { perturbed.samples()[k] |= 1u; });
    benchmark::DoNotOptimize(metrics::fitness(perturbed, cleared, cfg.fitness));
  }
}

}  // namespace

BENCHMARK(BM_WindowSumsSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_WindowSumsOpenMP)->Arg(256)->Arg(1024);
BENCHMARK(BM_SquaredErrorSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_SquaredErrorOpenMP)->Arg(256)->Arg(1024);
BENCHMARK(BM_SequenceScoreIncremental)->Arg(256)->Arg(512);
BENCHMARK(BM_SequenceScoreFull)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
