#include <benchmark/benchmark.h>

#include "aurif/cyclotomic.hpp"
#include "aurif/factorizer.hpp"
#include "aurif/gauss.hpp"
#include "aurif/lucas.hpp"
#include "aurif/series.hpp"

namespace {

void BM_AlgorithmD(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::algorithm_d(n));
}
BENCHMARK(BM_AlgorithmD)->Arg(15)->Arg(105)->Arg(301)->Arg(1155);

void BM_AlgorithmDNoSymmetry(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::algorithm_d(n, aurif::GaussOptions{.use_symmetry = false}));
}
BENCHMARK(BM_AlgorithmDNoSymmetry)->Arg(105)->Arg(301)->Arg(1155);

void BM_AlgorithmL(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::algorithm_l(n));
}
BENCHMARK(BM_AlgorithmL)->Arg(14)->Arg(105)->Arg(301)->Arg(1155);

void BM_VerifyLucas(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::verify_lucas(n));
}
BENCHMARK(BM_VerifyLucas)->Arg(105)->Arg(301);

void BM_PhiMoebius(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::phi_moebius(n));
}
BENCHMARK(BM_PhiMoebius)->Arg(105)->Arg(1155)->Arg(3003);

void BM_PhiRecursive(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::phi_recursive(n));
}
BENCHMARK(BM_PhiRecursive)->Arg(105)->Arg(1155)->Arg(3003);

void BM_GaussSeriesOracle(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::gauss_via_series(n));
}
BENCHMARK(BM_GaussSeriesOracle)->Arg(15)->Arg(61)->Arg(105);

void BM_LucasSeriesOracle(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::lucas_via_series(n));
}
BENCHMARK(BM_LucasSeriesOracle)->Arg(14)->Arg(61)->Arg(105);

void BM_HatF(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::hat_f(n, 1));
}
BENCHMARK(BM_HatF)->Arg(15)->Arg(105)->Arg(301);

void BM_FactorByRounding(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(aurif::factor_by_rounding(n, 1));
}
BENCHMARK(BM_FactorByRounding)->Arg(15)->Arg(105);

}  // namespace

BENCHMARK_MAIN();
