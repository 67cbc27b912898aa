#include <benchmark/benchmark.h>

#include "tromino/analytics.hpp"
#include "tromino/count.hpp"

using namespace tromino;

static void BM_CountTrominoWidth4(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_tromino(DeficientBoard(4, cols)));
    }
}
BENCHMARK(BM_CountTrominoWidth4)->Arg(12)->Arg(30)->Arg(60)->Arg(120);

static void BM_CountTrominoWide(benchmark::State& state) {
    const int rows = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_tromino(DeficientBoard(rows, 18)));
    }
}
BENCHMARK(BM_CountTrominoWide)->Arg(9)->Arg(12)->Arg(15);

static void BM_CountMixedBudgeted(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_tromino_plus_one_domino(Rect{4, cols}));
    }
}
BENCHMARK(BM_CountMixedBudgeted)->Arg(14)->Arg(32)->Arg(62);

static void BM_CountMixedOuterSum(benchmark::State& state) {
    const int cols = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_tromino_plus_one_domino_by_sum(Rect{4, cols}));
    }
}
BENCHMARK(BM_CountMixedOuterSum)->Arg(14)->Arg(32);

static void BM_CountDomino(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_domino(Rect{side, side}));
    }
}
BENCHMARK(BM_CountDomino)->Arg(8)->Arg(12)->Arg(16);

static void BM_Kasteleyn(benchmark::State& state) {
    const int half = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kasteleyn_count(half, half));
    }
}
BENCHMARK(BM_Kasteleyn)->Arg(6)->Arg(16);

static void BM_GfSeries(benchmark::State& state) {
    const auto f = derived_gfs().f_printed;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf_series(f, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_GfSeries)->Arg(64)->Arg(512);
