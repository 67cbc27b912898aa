#include <benchmark/benchmark.h>

#include "tromino/solver.hpp"

using namespace tromino;

static void BM_SolveTileable(benchmark::State& state) {
    const DeficientBoard board(13, 11, {{8, 1}, {8, 2}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(board));
    }
}
BENCHMARK(BM_SolveTileable);

// full exhaustion of an untileable board: the bad pair sits at the far
// corner, the last region reached by the lexicographic branching
static void BM_SolveExhaustUntileable(benchmark::State& state) {
    const DeficientBoard board(7, 11, {{6, 10}, {6, 11}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_exact(board));
    }
}
BENCHMARK(BM_SolveExhaustUntileable);

static void BM_EnumerateAll(benchmark::State& state) {
    const DeficientBoard board(5, 9, {{2, 2}, {2, 3}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_tilings(board));
    }
}
BENCHMARK(BM_EnumerateAll);
