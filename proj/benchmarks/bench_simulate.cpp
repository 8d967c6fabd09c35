#include <benchmark/benchmark.h>

#include "retrieval/constructions.hpp"
#include "retrieval/simulate.hpp"

using namespace retrieval;

static void BM_SimulateCycle(benchmark::State& state) {
    const CodeSpec code = make_hybrid_cycle(4, 1);
    const std::uint64_t trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const SimEstimate est = simulate(code, trials, 42, 1);
        benchmark::DoNotOptimize(est.means.t1);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(trials));
}
BENCHMARK(BM_SimulateCycle)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SimulateGenericField(benchmark::State& state) {
    const CodeSpec code = make_dedicated(2, 6, 1, 3);  // GF(7)
    const std::uint64_t trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const SimEstimate est = simulate(code, trials, 42, 1);
        benchmark::DoNotOptimize(est.means.t1);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(trials));
}
BENCHMARK(BM_SimulateGenericField)->Arg(10000)->Unit(benchmark::kMillisecond);
