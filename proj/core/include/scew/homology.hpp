#pragma once

#include <compare>
#include <vector>

#include "scew/mutation.hpp"

namespace scew {

struct Point {
    Index x = 0;
    Index y = 0;
    auto operator<=>(const Point&) const = default;
};

/**
 * The homologous path P_H: the monotone lattice path encoding the true edit
 * history from S[p+1..p+m'] to S'.  Points are produced in lexicographic
 * order, so membership is a binary search.
 */
struct HomologousPath {
    Index p = 0;
    Index m_prime = 0;
    Index m = 0;                 // |S'|
    std::vector<Point> points;   // starts at (p, 0), ends at (p+m_prime, m)

    bool contains(const Point& q) const;

    // first index whose point has x >= value (and same for y); the x and y
    // coordinate arrays are both non-decreasing along the path
    size_t lower_bound_x(Index x) const;
    size_t upper_bound_x(Index x) const;
    size_t lower_bound_y(Index y) const;
    size_t upper_bound_y(Index y) const;
};

// the four appending cases: no indel / insertion only / deletion only / both
HomologousPath build_homologous_path(const EditScript& script);

/**
 * Correspondence map f.  forward(x) = max{y : (x,y) in P_H} for non-deleted
 * generative x, 0 (null) otherwise; inverse(y) = x iff forward(x) = y.
 * Position 0 is never a valid coordinate, so 0 doubles as the null marker.
 */
struct CorrespondenceMap {
    Index n = 0;
    Index m = 0;
    std::vector<Index> fwd;   // size n+1, index by x, 0 = null
    std::vector<Index> inv;   // size m+1, index by y, 0 = null

    Index forward(Index x) const { return (x >= 1 && x <= n) ? fwd[static_cast<size_t>(x)] : 0; }
    Index inverse(Index y) const { return (y >= 1 && y <= m) ? inv[static_cast<size_t>(y)] : 0; }
};

CorrespondenceMap correspondence(const HomologousPath& path, const EditScript& script, Index n);

} // namespace scew
