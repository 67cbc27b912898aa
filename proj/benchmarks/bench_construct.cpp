#include <benchmark/benchmark.h>

#include "tromino/construct.hpp"

using namespace tromino;

static void BM_ConstructTiling(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const DeficientBoard board(side, side + 1, {{side / 2, side / 2}, {side / 2, side / 2 + 1}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_tiling(board));
    }
}
BENCHMARK(BM_ConstructTiling)->Arg(13)->Arg(61)->Arg(121)->Arg(301);

static void BM_TileFullRect(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tile_full_rect(Rect{side, side + 3}));
    }
}
BENCHMARK(BM_TileFullRect)->Arg(9)->Arg(45)->Arg(201);

static void BM_Decide(benchmark::State& state) {
    const DeficientBoard board(1000, 1001, {{500, 500}, {500, 501}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(decide(board));
    }
}
BENCHMARK(BM_Decide);

BENCHMARK_MAIN();
