#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "scew/extension.hpp"
#include "scew/homology.hpp"
#include "scew/sequence.hpp"

namespace scew {

/**
 * Non-recoverable machinery.  For every path point (i,j):
 *   r(i,j) = max t with S[i+1..i+t] = S'[j+1..j+t] letterwise and
 *            (i+l, j+l) off the path for 1 <= l <= t
 *   l(i,j) = max t with S[i-1..i-t] = S'[j-1..j-t] letterwise and
 *            (i-l, j-l) off the path for 1 <= l <= t
 * U is the union over the path of
 *   NR(i,j) = {(x,y) on path : i < x <= i+r or j < y <= j+r}
 *   NL(i,j) = {(x,y) on path : i >= x > i-l or j >= y > j-l}
 * (NL deliberately admits (i,j) itself whenever l >= 1.)
 */
struct NonRecoverableSet {
    std::vector<Index> r, l;        // parallel to path.points
    std::vector<uint8_t> in_U;      // parallel membership mask
    Index u_size = 0;               // number of marked path points

    bool contains_index(size_t idx) const { return in_U[idx] != 0; }
    std::vector<Point> points(const HomologousPath& path) const;
};

NonRecoverableSet non_recoverable(const HomologousPath& path, const Sequence& S,
                                  const Sequence& S_prime);

/**
 * Align(C): union of the chain's anchor diagonals and every non-empty gap
 * box between consecutive anchors, kept implicit.  Boxes can hold
 * quadratically many cells, so intersection with the path is done by
 * clipping the monotone path against each box instead of materializing.
 */
class AlignSet {
public:
    AlignSet(std::vector<Anchor> chain, int k);

    bool contains(Point pt) const;

    // mask over path point indices: covered by Align(C)
    std::vector<uint8_t> path_mask(const HomologousPath& path) const;
    Index intersect_path_count(const HomologousPath& path) const;

    const std::vector<GapBox>& boxes() const { return boxes_; }

private:
    std::vector<Anchor> chain_;
    int k_;
    std::vector<GapBox> boxes_;   // non-empty only
};

struct RecoverabilityReport {
    double generalized = 0.0;
    double prequel = 0.0;
    Index ph_size = 0;      // universe size |P_H| (origin excluded)
    Index u_size = 0;       // |U| within the universe
    Index covered = 0;      // |Align(C) ∩ P_H \ U|
    Index covered_all = 0;  // |Align(C) ∩ P_H|
};

// the origin (p, 0) anchors the path but aligns no letter pair; it is
// excluded from numerator and denominator of both metrics
RecoverabilityReport recoverability(const HomologousPath& path, const NonRecoverableSet& U,
                                    const std::vector<Anchor>& chain, int k);

double recoverability_generalized(const HomologousPath& path, const NonRecoverableSet& U,
                                  const std::vector<Anchor>& chain, int k);
double recoverability_prequel(const HomologousPath& path, const std::vector<Anchor>& chain,
                              int k);

void write_recoverability_csv_header(std::ostream& os);
void write_recoverability_csv_row(std::ostream& os, uint64_t trial, uint64_t seed,
                                  double theta_T, double gamma, int k, Index n, Index m,
                                  const RecoverabilityReport& report);

} // namespace scew
