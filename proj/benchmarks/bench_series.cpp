#include <benchmark/benchmark.h>

#include "blowup/betti.hpp"
#include "blowup/character.hpp"
#include "blowup/marked.hpp"

using namespace blowup;

namespace {

void BM_EnumerateFixedPoints(benchmark::State& state) {
    int budget = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerateFixedPoints(1, 2, budget));
}
BENCHMARK(BM_EnumerateFixedPoints)->Arg(8)->Arg(10)->Arg(12);

void BM_TangentCharacter(benchmark::State& state) {
    auto points = enumerateFixedPoints(2, 2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const FixedPoint& f : points)
            benchmark::DoNotOptimize(tangentCharacter(f));
    state.SetItemsProcessed(state.iterations() * points.size());
}
BENCHMARK(BM_TangentCharacter)->Arg(4)->Arg(6);

void BM_GenFunEnumeration(benchmark::State& state) {
    Rational order(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(genFunEnumeration(1, 0, 2, order));
}
BENCHMARK(BM_GenFunEnumeration)->Arg(4)->Arg(6)->Arg(8);

void BM_GenFunProduct(benchmark::State& state) {
    Rational order(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(genFunProduct(2, 0, 1, order));
}
BENCHMARK(BM_GenFunProduct)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
