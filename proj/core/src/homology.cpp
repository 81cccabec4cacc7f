#include "scew/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace scew {

bool HomologousPath::contains(const Point& q) const {
    return std::binary_search(points.begin(), points.end(), q);
}

size_t HomologousPath::lower_bound_x(Index x) const {
    return static_cast<size_t>(std::lower_bound(points.begin(), points.end(), x,
                               [](const Point& pt, Index v) { return pt.x < v; }) - points.begin());
}

size_t HomologousPath::upper_bound_x(Index x) const {
    return static_cast<size_t>(std::upper_bound(points.begin(), points.end(), x,
                               [](Index v, const Point& pt) { return v < pt.x; }) - points.begin());
}

size_t HomologousPath::lower_bound_y(Index y) const {
    return static_cast<size_t>(std::lower_bound(points.begin(), points.end(), y,
                               [](const Point& pt, Index v) { return pt.y < v; }) - points.begin());
}

size_t HomologousPath::upper_bound_y(Index y) const {
    return static_cast<size_t>(std::upper_bound(points.begin(), points.end(), y,
                               [](Index v, const Point& pt) { return v < pt.y; }) - points.begin());
}

HomologousPath build_homologous_path(const EditScript& script) {
    HomologousPath path;
    path.p = script.p;
    path.m_prime = script.m_prime;
    path.points.reserve(static_cast<size_t>(script.m_prime) + 1);

    Index x = script.p, y = 0;
    path.points.push_back({x, y});
    for (const auto& rec : script.records) {
        Index ins = static_cast<Index>(rec.ins.size());
        // insertion letters first (left of the position), then the position
        // itself: diagonal step if kept, horizontal step if deleted
        for (Index t = 1; t <= ins; ++t) path.points.push_back({x, y + t});
        y += ins;
        if (rec.del) {
            path.points.push_back({x + 1, y});
        } else {
            path.points.push_back({x + 1, y + 1});
            y += 1;
        }
        x += 1;
    }
    path.m = y;
    return path;
}

CorrespondenceMap correspondence(const HomologousPath& path, const EditScript& script, Index n) {
    if (path.p != script.p || path.m_prime != script.m_prime)
        throw std::invalid_argument("path and script disagree on the generative region");
    CorrespondenceMap map;
    map.n = n;
    map.m = path.m;
    map.fwd.assign(static_cast<size_t>(n) + 1, 0);
    map.inv.assign(static_cast<size_t>(path.m) + 1, 0);

    // points are sorted, so the last point seen for a given x carries max y
    for (const Point& pt : path.points) {
        if (pt.x >= script.p + 1 && pt.x <= script.p + script.m_prime)
            map.fwd[static_cast<size_t>(pt.x)] = pt.y;
    }
    for (const auto& rec : script.records) {
        if (rec.del) map.fwd[static_cast<size_t>(rec.pos)] = 0;
    }
    for (Index x = script.p + 1; x <= script.p + script.m_prime; ++x) {
        Index y = map.fwd[static_cast<size_t>(x)];
        if (y > 0) map.inv[static_cast<size_t>(y)] = x;
    }
    return map;
}

} // namespace scew
