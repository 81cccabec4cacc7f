#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "scew/seeding.hpp"

namespace scew {

// default slack when comparing chain scores; also the tie window inside
// the optimizers (ties resolve toward the smaller sorted anchor index)
inline constexpr double kChainScoreTol = 1e-9;

struct ChainResult {
    std::vector<int> indices;   // positions into the sorted anchor vector
    double score = 0.0;
    uint64_t ops = 0;           // inner-loop work performed by the optimizer
};

// chain validity: strictly increasing i, non-decreasing j
bool is_valid_chain(const std::vector<Anchor>& anchors, const std::vector<int>& chain);

// score = u - xi * (i_u - i_1 + j_u - j_1) for a chain of u anchors
double score_chain(const std::vector<Anchor>& anchors, const std::vector<int>& chain, double xi);

// O(N^2) reference DP; anchors must be sorted by (i, j)
ChainResult optimal_chain_quadratic(const std::vector<Anchor>& anchors, double xi);

// O(N log N) DP using a prefix-max Fenwick tree over compressed j;
// produces exactly the same chain as the quadratic DP
ChainResult optimal_chain_fast(const std::vector<Anchor>& anchors, double xi);

// exhaustive DFS over every valid chain; intended for N <= 20
ChainResult brute_force_optimal(const std::vector<Anchor>& anchors, double xi);

void write_chain_csv(std::ostream& os, const std::vector<Anchor>& anchors,
                     const ChainResult& result);

} // namespace scew
