#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "scew/chaining.hpp"
#include "scew/rng.hpp"

using namespace scew;

namespace {

std::vector<Anchor> random_anchors(Rng& rng, int count, Index coord_max) {
    std::vector<Anchor> out;
    out.reserve(size_t(count));
    for (int t = 0; t < count; ++t)
        out.push_back({rng.uniform_int(1, coord_max), rng.uniform_int(1, coord_max),
                       AnchorClass::Unclassified});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TEST_CASE("trivial chains") {
    const double xi = 0.01;
    CHECK(optimal_chain_quadratic({}, xi).indices.empty());
    CHECK(optimal_chain_fast({}, xi).indices.empty());
    CHECK(brute_force_optimal({}, xi).indices.empty());

    const std::vector<Anchor> one = {{5, 9}};
    for (const ChainResult& r :
         {optimal_chain_quadratic(one, xi), optimal_chain_fast(one, xi),
          brute_force_optimal(one, xi)}) {
        REQUIRE(r.indices == std::vector<int>{0});
        CHECK(r.score == doctest::Approx(1.0));
    }
}

TEST_CASE("anchors must arrive sorted") {
    const std::vector<Anchor> unsorted = {{3, 1}, {1, 2}};
    CHECK_THROWS_AS(optimal_chain_quadratic(unsorted, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(optimal_chain_fast(unsorted, 0.1), std::invalid_argument);
}

TEST_CASE("chain validity rules") {
    const std::vector<Anchor> anchors = {{1, 1}, {2, 2}, {2, 3}, {3, 1}};
    CHECK(is_valid_chain(anchors, {0, 1}));
    CHECK(is_valid_chain(anchors, {0, 2}));
    CHECK_FALSE(is_valid_chain(anchors, {1, 2}));   // i not strictly increasing
    CHECK_FALSE(is_valid_chain(anchors, {2, 3}));   // j decreases
    CHECK(is_valid_chain(anchors, {}));
    CHECK_FALSE(is_valid_chain(anchors, {4}));      // out of range
}

TEST_CASE("score matches the definition") {
    const std::vector<Anchor> anchors = {{1, 1}, {2, 2}, {3, 3}};
    const double xi = 1.0 / 8.0;
    // 3 anchors, span (3-1) + (3-1) = 4 -> 3 - 4/8 = 2.5
    CHECK(score_chain(anchors, {0, 1, 2}, xi) == doctest::Approx(2.5));
}

TEST_CASE("worked example chain") {
    // the k=3 anchor set of the worked example, xi = 1/n = 1/8
    std::vector<Anchor> anchors = {{1, 1}, {1, 6}, {2, 2}, {3, 3}};
    const double xi = 1.0 / 8.0;
    for (const ChainResult& r :
         {optimal_chain_quadratic(anchors, xi), optimal_chain_fast(anchors, xi),
          brute_force_optimal(anchors, xi)}) {
        REQUIRE(r.indices == std::vector<int>{0, 2, 3});
        CHECK(anchors[size_t(r.indices[0])] == Anchor{1, 1});
        CHECK(anchors[size_t(r.indices[1])] == Anchor{2, 2});
        CHECK(anchors[size_t(r.indices[2])] == Anchor{3, 3});
        CHECK(r.score == doctest::Approx(2.5));
    }
}

TEST_CASE("gap penalty can prefer shorter chains") {
    // with a huge penalty a single anchor beats any pair
    const std::vector<Anchor> anchors = {{1, 1}, {100, 100}};
    const ChainResult r = optimal_chain_fast(anchors, 0.9);
    CHECK(r.indices.size() == 1);
    CHECK(r.score == doctest::Approx(1.0));
}

TEST_CASE("three optimizers agree on random sets") {
    Rng rng(41);
    for (int rep = 0; rep < 400; ++rep) {
        const auto anchors = random_anchors(rng, int(rng.uniform_int(0, 12)), 30);
        const double xi = rng.next_double() * 0.2 + 1e-4;

        const ChainResult quad = optimal_chain_quadratic(anchors, xi);
        const ChainResult fast = optimal_chain_fast(anchors, xi);
        const ChainResult brute = brute_force_optimal(anchors, xi);

        CHECK(std::abs(quad.score - brute.score) <= kChainScoreTol);
        CHECK(std::abs(fast.score - brute.score) <= kChainScoreTol);
        CHECK(is_valid_chain(anchors, quad.indices));
        CHECK(is_valid_chain(anchors, fast.indices));
        CHECK(score_chain(anchors, quad.indices, xi) == doctest::Approx(quad.score));
    }
}

TEST_CASE("fast and quadratic agree exactly, chains included") {
    Rng rng(42);
    for (int rep = 0; rep < 60; ++rep) {
        const auto anchors = random_anchors(rng, int(rng.uniform_int(0, 300)), 80);
        const double xi = rng.next_double() * 0.05 + 1e-5;
        const ChainResult quad = optimal_chain_quadratic(anchors, xi);
        const ChainResult fast = optimal_chain_fast(anchors, xi);
        // bit-identical scores and identical tie-breaking
        CHECK(quad.score == fast.score);
        CHECK(quad.indices == fast.indices);
    }
}

TEST_CASE("determinism under duplicate coordinates and ties") {
    // many anchors share i or j; reruns must give identical chains
    std::vector<Anchor> anchors;
    for (Index i = 1; i <= 6; ++i)
        for (Index j = 1; j <= 6; ++j) anchors.push_back({i, j});
    std::sort(anchors.begin(), anchors.end());
    const double xi = 1e-6;
    const ChainResult first = optimal_chain_fast(anchors, xi);
    for (int rep = 0; rep < 5; ++rep) {
        const ChainResult again = optimal_chain_fast(anchors, xi);
        CHECK(again.indices == first.indices);
        CHECK(again.score == first.score);
    }
    CHECK(first.indices == optimal_chain_quadratic(anchors, xi).indices);
    // with a negligible penalty the best chain keeps one anchor per column
    CHECK(first.indices.size() == 6);
}

TEST_CASE("ops counters are populated") {
    Rng rng(43);
    const auto anchors = random_anchors(rng, 200, 100);
    const ChainResult quad = optimal_chain_quadratic(anchors, 0.01);
    const ChainResult fast = optimal_chain_fast(anchors, 0.01);
    CHECK(quad.ops > 0);
    CHECK(fast.ops > 0);
    // the tree-based optimizer does asymptotically less work
    CHECK(fast.ops < quad.ops);
}

TEST_CASE("chain csv format") {
    const std::vector<Anchor> anchors = {{1, 1}, {1, 6}, {2, 2}};
    ChainResult r;
    r.indices = {0, 2};
    std::ostringstream os;
    write_chain_csv(os, anchors, r);
    CHECK(os.str() == "ord,i,j\n1,1,1\n2,2,2\n");
}
