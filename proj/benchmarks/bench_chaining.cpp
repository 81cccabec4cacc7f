#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "scew/chaining.hpp"
#include "scew/rng.hpp"
#include "scew/seeding.hpp"

using namespace scew;

namespace {

std::vector<Anchor> random_anchors(int count, uint64_t seed) {
    Rng rng(seed);
    const Index span = static_cast<Index>(count) * 8;
    std::vector<Anchor> out;
    out.reserve(static_cast<size_t>(count));
    for (int t = 0; t < count; ++t)
        out.push_back({rng.uniform_int(1, span), rng.uniform_int(1, span),
                       AnchorClass::Unclassified});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

static void BM_chain_fast(benchmark::State& state) {
    const auto anchors = random_anchors(static_cast<int>(state.range(0)), 42);
    const double xi = 1.0 / (8.0 * static_cast<double>(anchors.size()));
    for (auto _ : state) {
        ChainResult res = optimal_chain_fast(anchors, xi);
        benchmark::DoNotOptimize(res.score);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(anchors.size()));
}
BENCHMARK(BM_chain_fast)->RangeMultiplier(4)->Range(64, 16384);

static void BM_chain_quadratic(benchmark::State& state) {
    const auto anchors = random_anchors(static_cast<int>(state.range(0)), 42);
    const double xi = 1.0 / (8.0 * static_cast<double>(anchors.size()));
    for (auto _ : state) {
        ChainResult res = optimal_chain_quadratic(anchors, xi);
        benchmark::DoNotOptimize(res.score);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(anchors.size()));
}
BENCHMARK(BM_chain_quadratic)->RangeMultiplier(4)->Range(64, 4096);

BENCHMARK_MAIN();
