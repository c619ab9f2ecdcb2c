#include <benchmark/benchmark.h>

#include "gossez/duality.hpp"
#include "gossez/lp.hpp"
#include "gossez/operators.hpp"
#include "gossez/probe.hpp"
#include "gossez/random.hpp"

namespace {

using namespace gossez;

static void BM_GossezApply(benchmark::State& state) {
  RandomValues gen(1);
  const SparseSeq x = gen.sparse(static_cast<std::size_t>(state.range(0)), static_cast<Index>(2 * state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gossez_apply(x));
}
BENCHMARK(BM_GossezApply)->Arg(8)->Arg(64)->Arg(512);

static void BM_ClampedResidual(benchmark::State& state) {
  RandomValues gen(2);
  const SparseSeq x = gen.sparse(static_cast<std::size_t>(state.range(0)), static_cast<Index>(2 * state.range(0)));
  const EvConstSeq target = gen.ev_const(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clamped_residual(x, Rational(3, 2), target));
}
BENCHMARK(BM_ClampedResidual)->Arg(8)->Arg(64);

static void BM_PatternLp(benchmark::State& state) {
  const SignPattern sigma(static_cast<std::size_t>(state.range(0)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(pattern_lp(sigma, 1.0, neg_e_star()));
}
BENCHMARK(BM_PatternLp)->DenseRange(2, 12, 5);

static void BM_ProbeExact(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(probe_exact(1.0, static_cast<std::size_t>(state.range(0)), neg_e_star(), ProbeOptions{1}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProbeExact)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_ProbeHeuristic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(probe_heuristic(1.0, 10, neg_e_star(), static_cast<std::uint64_t>(state.range(0)), 42));
  }
}
BENCHMARK(BM_ProbeHeuristic)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
