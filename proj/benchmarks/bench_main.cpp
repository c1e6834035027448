#include <benchmark/benchmark.h>

#include "polymaass/expansion.hpp"
#include "polymaass/kloosterman.hpp"
#include "polymaass/modforms.hpp"
#include "polymaass/special.hpp"

using namespace polymaass;

static void BM_KloostermanSum(benchmark::State& state) {
  long c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kloosterman_sum(-1, 7, c));
}
BENCHMARK(BM_KloostermanSum)->Arg(97)->Arg(1000)->Arg(9973);

static void BM_KloostermanTable(benchmark::State& state) {
  long c_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kloosterman_table(-1, -10, 10, c_max));
  state.SetItemsProcessed(state.iterations() * 21 * c_max);
}
BENCHMARK(BM_KloostermanTable)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_LSeries(benchmark::State& state) {
  LSeriesSpec spec{1, 1, 1.0, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(l_series(spec).value);
}
BENCHMARK(BM_LSeries)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_WhittakerW(benchmark::State& state) {
  WhittakerParams p{1.0, 0.75, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(whittaker_W(p));
}
BENCHMARK(BM_WhittakerW)->Arg(1)->Arg(10)->Arg(40);

static void BM_Mplus(benchmark::State& state) {
  WhittakerParams p{1.0, 0.75, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(mplus(p));
}
BENCHMARK(BM_Mplus)->Arg(1)->Arg(10);

static void BM_DukeJenkins(benchmark::State& state) {
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(duke_jenkins(12, 1, N).a(1));
}
BENCHMARK(BM_DukeJenkins)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_ExpansionEval(benchmark::State& state) {
  TruncationPolicy p;
  p.c_max = 200;
  p.n_max = 10;
  FourierWhittakerExpansion e = taylor_expansion({2, 1, 1, 0.0}, p);
  EvalPoint z(0.3, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(expansion_eval(e, z));
}
BENCHMARK(BM_ExpansionEval)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
