#include <benchmark/benchmark.h>

#include <vector>

#include "scew/chaining.hpp"
#include "scew/extension.hpp"
#include "scew/harness.hpp"
#include "scew/mutation.hpp"
#include "scew/rng.hpp"
#include "scew/seeding.hpp"
#include "scew/sequence.hpp"

using namespace scew;

namespace {

struct Fixture {
    Sequence S;
    Sequence Sp;
    std::vector<Anchor> chain;
    Index p = 0;
    Index m_prime = 0;
};

// simulate a pair, seed, chain: the benchmark body then times extension only
Fixture make_fixture(Index n, Index m_prime, int k, uint64_t seed) {
    Rng rng(seed);
    Fixture fx;
    fx.S = generate_reference(n, 4, rng);
    const MutationParams params = draw_channel_rates(0.10, 0.5, 4, false, rng);
    fx.p = rng.uniform_int(0, n - m_prime);
    fx.m_prime = m_prime;
    const SequencePair pair = mutate(fx.S, fx.p, m_prime, params, rng, false);
    fx.Sp = pair.S_prime;
    std::vector<Anchor> anchors = find_anchors(fx.S, fx.Sp, k);
    const ChainResult res = optimal_chain_fast(anchors, 1.0 / static_cast<double>(n));
    fx.chain = materialize_chain(anchors, res.indices);
    return fx;
}

} // namespace

static void BM_full_alignment(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const Index n = 1 << 16;
    const Fixture fx = make_fixture(n, n / 8, k, 7);
    FullAlignOptions opt;
    opt.include_ends = true;
    opt.p = fx.p;
    opt.m_prime = fx.m_prime;
    for (auto _ : state) {
        Alignment aln = full_alignment(fx.S, fx.Sp, fx.chain, k, opt);
        benchmark::DoNotOptimize(aln.cells_touched);
    }
}
BENCHMARK(BM_full_alignment)->Arg(12)->Arg(16)->Arg(20);

static void BM_extend_gap_square(benchmark::State& state) {
    const Index side = state.range(0);
    Rng rng(11);
    const Sequence S = generate_reference(side, 4, rng);
    const Sequence Sp = generate_reference(side, 4, rng);
    GapBox box;
    box.x_lo = 1, box.x_hi = side, box.y_lo = 1, box.y_hi = side;
    for (auto _ : state) {
        GapAlignment g = extend_gap(S, Sp, box);
        benchmark::DoNotOptimize(g.cost);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(box.cells()));
}
BENCHMARK(BM_extend_gap_square)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
