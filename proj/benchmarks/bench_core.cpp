#include <benchmark/benchmark.h>

#include "qskein/bubble.hpp"
#include "qskein/quantum.hpp"
#include "qskein/series.hpp"
#include "qskein/tail_gamma.hpp"

using namespace qskein;

static void BM_Tail85(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tail_85(order));
}
BENCHMARK(BM_Tail85)->Arg(30)->Arg(121)->Unit(benchmark::kMillisecond);

static void BM_Tail85DoubleSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tail_85_double_sum(121));
}
BENCHMARK(BM_Tail85DoubleSum)->Unit(benchmark::kMillisecond);

static void BM_BubbleCoeff(benchmark::State& state) {
  const auto method = static_cast<CoeffMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bubble_coeff(method, 5, 4, 5, 4, 2));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_BubbleCoeff)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

static void BM_Theta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theta(5, 5, 5));
}
BENCHMARK(BM_Theta)->Unit(benchmark::kMicrosecond);

static void BM_StateSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sb_state_sum(n));
}
BENCHMARK(BM_StateSum)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_Gcd(benchmark::State& state) {
  LaurentPoly f = delta(2 * static_cast<int>(state.range(0)) + 1);
  LaurentPoly g = delta(static_cast<int>(state.range(0)));
  for (int t = 0; t < 3; ++t) {
    f *= delta(5);
    g *= delta(5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp_gcd(f, g));
}
BENCHMARK(BM_Gcd)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_SeriesInvert(benchmark::State& state) {
  const TruncatedSeries p = qpoch_infinite(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ts_invert(p));
}
BENCHMARK(BM_SeriesInvert)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
