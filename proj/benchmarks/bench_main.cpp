// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "cha/accel.hpp"
#include "cha/contfrac.hpp"
#include "cha/oracle.hpp"
#include "cha/series.hpp"

namespace {

void BM_PartialSum(benchmark::State& state) {
  const cha::SeriesParams params{2, 1};
  const auto n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cha::partial_sum(params, n));
  }
}
BENCHMARK(BM_PartialSum)->Arg(100)->Arg(1000);

void BM_ConvergentStream(benchmark::State& state) {
  const cha::SeriesParams params{2, 1};
  const auto m = state.range(0);
  for (auto _ : state) {
    cha::ConvergentStream stream(params, 50);
    stream.advance_to(m);
    benchmark::DoNotOptimize(stream.b());
  }
}
BENCHMARK(BM_ConvergentStream)->Arg(100)->Arg(1000);

void BM_Reduite(benchmark::State& state) {
  const cha::SeriesParams params{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cha::reduite(params, 10, state.range(0)));
  }
}
BENCHMARK(BM_Reduite)->Arg(50)->Arg(500);

void BM_WValue(benchmark::State& state) {
  const cha::SeriesParams params{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cha::w_value(params, state.range(0)));
  }
}
BENCHMARK(BM_WValue)->Arg(100)->Arg(500);

void BM_ReferenceSum(benchmark::State& state) {
  const cha::SeriesParams params{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cha::reference_sum(params, state.range(0)));
  }
}
BENCHMARK(BM_ReferenceSum)->Arg(50)->Arg(200);

void BM_Aitken(benchmark::State& state) {
  const cha::SeriesParams params{1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cha::aitken_sequence(params, {2, state.range(0)}));
  }
}
BENCHMARK(BM_Aitken)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
