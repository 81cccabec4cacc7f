#include "scew/recoverability.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "scew/errors.hpp"
#include "scew/util.hpp"

namespace scew {

std::vector<Point> NonRecoverableSet::points(const HomologousPath& path) const {
    std::vector<Point> out;
    out.reserve(static_cast<size_t>(u_size));
    for (size_t idx = 0; idx < path.points.size(); ++idx)
        if (in_U[idx]) out.push_back(path.points[idx]);
    return out;
}

namespace {

// closed index interval of path points with x in [x_lo, x_hi]
std::pair<size_t, size_t> x_index_range(const HomologousPath& path, Index x_lo, Index x_hi) {
    return {path.lower_bound_x(x_lo), path.upper_bound_x(x_hi)};
}

std::pair<size_t, size_t> y_index_range(const HomologousPath& path, Index y_lo, Index y_hi) {
    return {path.lower_bound_y(y_lo), path.upper_bound_y(y_hi)};
}

void mark_interval(std::vector<int32_t>& diff, size_t lo, size_t hi) {
    if (lo >= hi) return;
    diff[lo] += 1;
    diff[hi] -= 1;
}

} // namespace

NonRecoverableSet non_recoverable(const HomologousPath& path, const Sequence& S,
                                  const Sequence& S_prime) {
    const size_t P = path.points.size();
    const Index n = S.size(), m = S_prime.size();
    NonRecoverableSet out;
    out.r.assign(P, 0);
    out.l.assign(P, 0);
    out.in_U.assign(P, 0);

    std::vector<int32_t> diff(P + 1, 0);
    for (size_t idx = 0; idx < P; ++idx) {
        const Index i = path.points[idx].x, j = path.points[idx].y;

        Index r = 0;
        while (i + r + 1 <= n && j + r + 1 <= m &&
               S.at1(i + r + 1) == S_prime.at1(j + r + 1) &&
               !path.contains({i + r + 1, j + r + 1}))
            ++r;
        out.r[idx] = r;
        if (r > 0) {
            auto [xa, xb] = x_index_range(path, i + 1, i + r);
            mark_interval(diff, xa, xb);
            auto [ya, yb] = y_index_range(path, j + 1, j + r);
            mark_interval(diff, ya, yb);
        }

        Index l = 0;
        while (i - l - 1 >= 1 && j - l - 1 >= 1 &&
               S.at1(i - l - 1) == S_prime.at1(j - l - 1) &&
               !path.contains({i - l - 1, j - l - 1}))
            ++l;
        out.l[idx] = l;
        if (l > 0) {
            auto [xa, xb] = x_index_range(path, i - l + 1, i);
            mark_interval(diff, xa, xb);
            auto [ya, yb] = y_index_range(path, j - l + 1, j);
            mark_interval(diff, ya, yb);
        }
    }

    int32_t depth = 0;
    for (size_t idx = 0; idx < P; ++idx) {
        depth += diff[idx];
        if (depth > 0) {
            out.in_U[idx] = 1;
            ++out.u_size;
        }
    }
    return out;
}

AlignSet::AlignSet(std::vector<Anchor> chain, int k) : chain_(std::move(chain)), k_(k) {
    if (!is_valid_chain(chain_)) throw std::invalid_argument("invalid chain");
    for (const GapBox& box : gap_boxes(chain_, k_))
        if (!box.empty()) boxes_.push_back(box);
}

bool AlignSet::contains(Point pt) const {
    for (const Anchor& a : chain_) {
        const Index off = pt.x - a.i;
        if (off >= 0 && off < k_ && pt.y - a.j == off) return true;
    }
    for (const GapBox& box : boxes_) {
        if (pt.x >= box.x_lo && pt.x <= box.x_hi && pt.y >= box.y_lo && pt.y <= box.y_hi)
            return true;
    }
    return false;
}

std::vector<uint8_t> AlignSet::path_mask(const HomologousPath& path) const {
    const size_t P = path.points.size();
    std::vector<uint8_t> mask(P, 0);
    // anchor diagonals: scan the path's x-slice and keep diagonal hits
    for (const Anchor& a : chain_) {
        const Index d = a.i - a.j;
        const size_t last = path.upper_bound_x(a.i + k_ - 1);
        for (size_t idx = path.lower_bound_x(a.i); idx != last; ++idx)
            if (path.points[idx].x - path.points[idx].y == d) mask[idx] = 1;
    }
    // boxes: x-range is a contiguous index interval; within it the y
    // condition is contiguous too because y never decreases along the path
    std::vector<int32_t> diff(P + 1, 0);
    for (const GapBox& box : boxes_) {
        auto [xa, xb] = x_index_range(path, box.x_lo, box.x_hi);
        if (xa >= xb) continue;
        auto ybegin = path.points.begin() + xa;
        auto yend = path.points.begin() + xb;
        auto lo = std::lower_bound(ybegin, yend, box.y_lo,
                                   [](const Point& pt, Index y) { return pt.y < y; });
        auto hi = std::upper_bound(ybegin, yend, box.y_hi,
                                   [](Index y, const Point& pt) { return y < pt.y; });
        mark_interval(diff, static_cast<size_t>(lo - path.points.begin()),
                      static_cast<size_t>(hi - path.points.begin()));
    }
    int32_t depth = 0;
    for (size_t idx = 0; idx < P; ++idx) {
        depth += diff[idx];
        if (depth > 0) mask[idx] = 1;
    }
    return mask;
}

Index AlignSet::intersect_path_count(const HomologousPath& path) const {
    const auto mask = path_mask(path);
    Index count = 0;
    for (uint8_t v : mask) count += v;
    return count;
}

RecoverabilityReport recoverability(const HomologousPath& path, const NonRecoverableSet& U,
                                    const std::vector<Anchor>& chain, int k) {
    const size_t P = path.points.size();
    if (P <= 1) throw DegenerateInput("homologous path has no alignable points");
    AlignSet align(chain, k);
    const auto mask = align.path_mask(path);

    RecoverabilityReport rep;
    for (size_t idx = 1; idx < P; ++idx) {   // index 0 is the origin (p, 0)
        const bool in_u = U.contains_index(idx);
        rep.ph_size += 1;
        if (in_u) rep.u_size += 1;
        if (mask[idx]) {
            rep.covered_all += 1;
            if (!in_u) rep.covered += 1;
        }
    }
    const Index denom = rep.ph_size - rep.u_size;
    if (denom <= 0) throw DegenerateInput("all path points are non-recoverable");
    rep.generalized = static_cast<double>(rep.covered) / static_cast<double>(denom);
    rep.prequel = static_cast<double>(rep.covered_all) / static_cast<double>(rep.ph_size);
    return rep;
}

double recoverability_generalized(const HomologousPath& path, const NonRecoverableSet& U,
                                  const std::vector<Anchor>& chain, int k) {
    return recoverability(path, U, chain, k).generalized;
}

double recoverability_prequel(const HomologousPath& path, const std::vector<Anchor>& chain,
                              int k) {
    NonRecoverableSet empty;
    empty.r.assign(path.points.size(), 0);
    empty.l.assign(path.points.size(), 0);
    empty.in_U.assign(path.points.size(), 0);
    return recoverability(path, empty, chain, k).prequel;
}

void write_recoverability_csv_header(std::ostream& os) {
    os << "trial,seed,theta_T,gamma,k,n,m,R_gen,R_prequel,U_size,PH_size\n";
}

void write_recoverability_csv_row(std::ostream& os, uint64_t trial, uint64_t seed,
                                  double theta_T, double gamma, int k, Index n, Index m,
                                  const RecoverabilityReport& report) {
    os << trial << ',' << seed << ',' << g12(theta_T) << ',' << g12(gamma) << ',' << k << ','
       << n << ',' << m << ',' << g12(report.generalized) << ',' << g12(report.prequel) << ','
       << report.u_size << ',' << report.ph_size << '\n';
}

} // namespace scew
