#include <benchmark/benchmark.h>

#include "scew/rng.hpp"
#include "scew/seeding.hpp"
#include "scew/sequence.hpp"

using namespace scew;

static void BM_kmer_index_build(benchmark::State& state) {
    const Index n = state.range(0);
    Rng rng(3);
    const Sequence S = generate_reference(n, 4, rng);
    for (auto _ : state) {
        KmerIndex index(S, 20);
        benchmark::DoNotOptimize(index.k());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_kmer_index_build)->RangeMultiplier(4)->Range(1 << 14, 1 << 20);

static void BM_find_anchors(benchmark::State& state) {
    const Index n = state.range(0);
    Rng rng(5);
    const Sequence S = generate_reference(n, 4, rng);
    const Sequence Sp = generate_reference(n / 8, 4, rng);
    const KmerIndex index(S, 20);
    for (auto _ : state) {
        auto anchors = find_anchors(index, Sp);
        benchmark::DoNotOptimize(anchors.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n / 8));
}
BENCHMARK(BM_find_anchors)->RangeMultiplier(4)->Range(1 << 14, 1 << 20);

BENCHMARK_MAIN();
