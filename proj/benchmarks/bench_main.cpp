#include <benchmark/benchmark.h>

#include "skeincalc/hecke.hpp"
#include "skeincalc/invariants.hpp"
#include "skeincalc/kauffman.hpp"

using namespace skc;

static void BM_ResolveTrefoilClosure(benchmark::State& state) {
    PlanarDiagram d = close_tangle(cable(census_knot("trefoil"), 1, 0), true);
    for (auto _ : state) {
        SkeinEngine eng;  // cold memo each iteration
        benchmark::DoNotOptimize(eng.plane_value(d));
    }
}
BENCHMARK(BM_ResolveTrefoilClosure);

static void BM_Fig8ReverseParallel(benchmark::State& state) {
    PlanarDiagram d = close_tangle(cable(census_knot("fig8"), 1, 1), true);
    for (auto _ : state) {
        SkeinEngine eng;
        benchmark::DoNotOptimize(eng.plane_value(d));
    }
}
BENCHMARK(BM_Fig8ReverseParallel);

static void BM_Fig8ReverseParallelWarmMemo(benchmark::State& state) {
    PlanarDiagram d = close_tangle(cable(census_knot("fig8"), 1, 1), true);
    SkeinEngine eng;
    benchmark::DoNotOptimize(eng.plane_value(d));
    for (auto _ : state) benchmark::DoNotOptimize(eng.plane_value(d));
}
BENCHMARK(BM_Fig8ReverseParallelWarmMemo);

static void BM_AInvariantFig8(benchmark::State& state) {
    FramedTangleKnot f8 = census_knot("fig8");
    for (auto _ : state) {
        SkeinEngine eng;
        benchmark::DoNotOptimize(
            a_invariant(f8, Partition({1}), Partition({1}), eng, false));
    }
}
BENCHMARK(BM_AInvariantFig8);

static void BM_YoungIdempotentWeight3(benchmark::State& state) {
    for (auto _ : state) {
        SkeinEngine eng;
        HeckeElement raw = symmetrizer(3, eng);
        benchmark::DoNotOptimize(hecke_multiply(raw, raw, eng));
    }
}
BENCHMARK(BM_YoungIdempotentWeight3);

static void BM_KauffmanFig8(benchmark::State& state) {
    UnorientedDiagram u =
        forget_orientation(close_tangle(cable(census_knot("fig8"), 1, 0), true));
    for (auto _ : state) {
        KauffmanEngine eng;
        benchmark::DoNotOptimize(eng.evaluate(u, KauffmanNorm::unknot));
    }
}
BENCHMARK(BM_KauffmanFig8);

BENCHMARK_MAIN();
