#include <benchmark/benchmark.h>

#include <random>

#include "retrieval/matrix.hpp"

using namespace retrieval;

static void BM_Gf2BasisInsert(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<std::uint64_t> words(1024);
    for (auto& w : words) w = rng() & 0xffffffffull;
    for (auto _ : state) {
        Gf2Basis basis;
        for (std::uint64_t w : words) benchmark::DoNotOptimize(basis.insert(w));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_Gf2BasisInsert);

static void BM_GenericBasisInsert(benchmark::State& state) {
    const Field f(11);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elem> d(0, 10);
    std::vector<Vec> vecs(256, Vec(16));
    for (auto& v : vecs)
        for (auto& x : v) x = d(rng);
    for (auto _ : state) {
        IncrementalBasis basis(f, 16);
        for (const Vec& v : vecs) benchmark::DoNotOptimize(basis.insert(v));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(vecs.size()));
}
BENCHMARK(BM_GenericBasisInsert);

static void BM_Rank(benchmark::State& state) {
    const Field f(2);
    std::mt19937_64 rng(3);
    Mat m(f, 32, 64);
    for (std::size_t i = 0; i < 32; ++i)
        for (std::size_t j = 0; j < 64; ++j)
            m.at(i, j) = static_cast<Elem>(rng() & 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank);
