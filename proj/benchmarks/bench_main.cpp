// Microbenchmarks for the solver-facing hot paths: exact LP solves behind
// Fermat-Weber points, the two triangle searches, and projection primitives.
// Times are informational; nothing here is asserted.
#include "tropfw/datagen.hpp"
#include "tropfw/fermat_weber.hpp"
#include "tropfw/projection.hpp"
#include "tropfw/triangle_search.hpp"
#include "tropfw/tropical.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace tropfw;

namespace {

DataMatrix sample8x5() {
    return DataMatrix::from_raw({
        {0, 211, 45, -33, 10},
        {0, -365, 23, 35, 64},
        {0, -40, -59, 63, 14},
        {0, 65, 257, 39, -35},
        {0, 13, 5, -261, 21},
        {0, -1, 91, 355, 7},
        {0, -644, 21, 58, 36},
        {0, 59, 4, 362, 15},
    });
}

DataMatrix generated(std::size_t m, std::size_t n, std::uint64_t seed) {
    GenConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.variance = 10.0;
    cfg.seed = seed;
    return gen_matrix(cfg);
}

void BM_FermatWeberPoint(benchmark::State& state) {
    const DataMatrix X = generated(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(fermat_weber_point(X));
}

void BM_FwLpBuild(benchmark::State& state) {
    const DataMatrix X = generated(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(fw_lp_build(X));
}

void BM_SearchLexWorkedSample(benchmark::State& state) {
    const DataMatrix X = sample8x5();
    for (auto _ : state) benchmark::DoNotOptimize(search_lex(X));
}

void BM_SearchPriorityWorkedSample(benchmark::State& state) {
    const DataMatrix X = sample8x5();
    for (auto _ : state) benchmark::DoNotOptimize(search_priority(X));
}

void BM_SearchLexGenerated(benchmark::State& state) {
    const DataMatrix X = generated(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(search_lex(X));
}

void BM_ProjectOntoTriangle(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TropicalTriangle C = gen_triangle(n, 9999.0, 5);
    const std::vector<TropicalPoint> gens = C.generators();
    const DataMatrix X = generated(1, n, 13);
    const TropicalPoint& x = X.row(0);
    for (auto _ : state) benchmark::DoNotOptimize(project_onto_tconv(x, gens));
}

void BM_CheckVerticalProjection(benchmark::State& state) {
    const DataMatrix X = generated(10, 8, 17);
    const PairIndex pair{2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(check_vertical_projection(X, pair));
}

BENCHMARK(BM_FwLpBuild)->Args({8, 5})->Args({30, 10});
BENCHMARK(BM_FermatWeberPoint)->Args({4, 3})->Args({8, 5})->Args({30, 5})->Args({30, 10});
BENCHMARK(BM_SearchLexWorkedSample);
BENCHMARK(BM_SearchPriorityWorkedSample);
BENCHMARK(BM_SearchLexGenerated)->Args({30, 5});
BENCHMARK(BM_ProjectOntoTriangle)->Arg(5)->Arg(20);
BENCHMARK(BM_CheckVerticalProjection);

}  // namespace

BENCHMARK_MAIN();
