#include <benchmark/benchmark.h>

#include "retrieval/constructions.hpp"
#include "retrieval/subset_counts.hpp"

using namespace retrieval;

static void BM_AlphaCycle(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    const CodeSpec code = make_hybrid_cycle(k, 1);
    for (auto _ : state) {
        const AlphaProfile a = alpha_exhaustive(code, 2, 28, false, 1);
        benchmark::DoNotOptimize(a.counts.data());
    }
    state.SetLabel("n=" + std::to_string(2 * k));
}
BENCHMARK(BM_AlphaCycle)->Arg(4)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_AlphaGlobalMds(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CodeSpec code = make_global_mds(n, n / 2, 1);
    for (auto _ : state) {
        const AlphaProfile a = alpha_exhaustive(code, 2, 28, false, 1);
        benchmark::DoNotOptimize(a.counts.data());
    }
}
BENCHMARK(BM_AlphaGlobalMds)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
