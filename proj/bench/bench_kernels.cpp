// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "dsaudit/kernels.hpp"
#include "dsaudit/sweep.hpp"

using namespace dsaudit;

namespace {

BodyOfEvidence random_body(std::size_t n, std::size_t focal_count) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
  const Frame f = make_frame(std::move(labels));
  std::mt19937_64 rng(n * 7919 + focal_count);
  std::uniform_int_distribution<Mask> pick(1, f.universe_mask());
  std::vector<Mask> masks;
  while (masks.size() < focal_count) {
    const Mask m = pick(rng);
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
  }
  const auto den = static_cast<std::int64_t>(focal_count * (focal_count + 1) / 2);
  std::vector<FocalElement> focal;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    focal.push_back({f.from_mask(masks[i]), Rational(static_cast<std::int64_t>(i + 1), den)});
  }
  return make_body(f, std::move(focal));
}

void BM_BeliefReference(benchmark::State& state) {
  const auto body = random_body(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::belief_reference(body));
}

void BM_BeliefParallel(benchmark::State& state) {
  const auto body = random_body(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::belief_parallel(body));
}

void BM_MobiusReference(benchmark::State& state) {
  const auto bel = kernels::belief_parallel(random_body(static_cast<std::size_t>(state.range(0)), 64));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mobius_reference(bel));
}

void BM_MobiusParallel(benchmark::State& state) {
  const auto bel = kernels::belief_parallel(random_body(static_cast<std::size_t>(state.range(0)), 64));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mobius_parallel(bel));
}

void BM_SweepReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_reference(Family::QuasiXXbarY, static_cast<std::size_t>(state.range(0))));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(Family::QuasiXXbarY, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_BeliefReference)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BeliefParallel)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MobiusReference)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MobiusParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepReference)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
