#include "scew/seeding.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "scew/errors.hpp"

namespace scew {

const char* anchor_class_name(AnchorClass c) {
    switch (c) {
        case AnchorClass::Homologous: return "homologous";
        case AnchorClass::Clipping: return "clipping";
        case AnchorClass::Spurious: return "spurious";
        default: return "unclassified";
    }
}

static int bits_for_sigma(int sigma) {
    return std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(sigma - 1))));
}

KmerIndex::KmerIndex(const Sequence& S, int k) : k_(k), n_(S.size()) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    bits_ = bits_for_sigma(S.sigma());
    if (bits_ * k > 128)
        throw std::invalid_argument("k too large for packed keys (bits*k > 128)");
    if (n_ < k) return;
    table_.reserve(static_cast<size_t>(n_ - k + 1));
    const unsigned __int128 mask =
        (bits_ * k == 128) ? ~static_cast<unsigned __int128>(0)
                           : ((static_cast<unsigned __int128>(1) << (bits_ * k)) - 1);
    unsigned __int128 key = 0;
    for (Index pos = 1; pos <= n_; ++pos) {
        key = ((key << bits_) | S.at1(pos)) & mask;
        if (pos >= k) table_[key].push_back(pos - k + 1);
    }
}

unsigned __int128 KmerIndex::pack(const Sequence& seq, Index pos) const {
    unsigned __int128 key = 0;
    for (int t = 0; t < k_; ++t) key = (key << bits_) | seq.at1(pos + t);
    return key;
}

const std::vector<Index>& KmerIndex::occurrences_of_key(unsigned __int128 key) const {
    auto it = table_.find(key);
    return it == table_.end() ? empty_ : it->second;
}

const std::vector<Index>& KmerIndex::occurrences(const Sequence& query, Index pos) const {
    return occurrences_of_key(pack(query, pos));
}

KmerIndex index_reference(const Sequence& S, int k) { return KmerIndex(S, k); }

std::vector<Anchor> find_anchors(const KmerIndex& index, const Sequence& S_prime) {
    std::vector<Anchor> out;
    const int k = index.k();
    const Index m = S_prime.size();
    if (m < k) return out;
    const int bits = bits_for_sigma(S_prime.sigma());
    const unsigned __int128 mask =
        (bits * k == 128) ? ~static_cast<unsigned __int128>(0)
                          : ((static_cast<unsigned __int128>(1) << (bits * k)) - 1);
    unsigned __int128 key = 0;
    for (Index j = 1; j <= m; ++j) {
        key = ((key << bits) | S_prime.at1(j)) & mask;
        if (j < k) continue;
        for (Index i : index.occurrences_of_key(key))
            out.push_back({i, j - k + 1, AnchorClass::Unclassified});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Anchor> find_anchors(const Sequence& S, const Sequence& S_prime, int k) {
    if (S.sigma() != S_prime.sigma())
        throw std::invalid_argument("alphabet size mismatch between sequences");
    // index the shorter sequence, stream the longer one
    if (S_prime.size() < S.size()) {
        KmerIndex idx(S_prime, k);
        std::vector<Anchor> out;
        const Index n = S.size();
        if (n < k) return out;
        const int bits = bits_for_sigma(S.sigma());
        const unsigned __int128 mask =
            (bits * k == 128) ? ~static_cast<unsigned __int128>(0)
                              : ((static_cast<unsigned __int128>(1) << (bits * k)) - 1);
        unsigned __int128 key = 0;
        for (Index i = 1; i <= n; ++i) {
            key = ((key << bits) | S.at1(i)) & mask;
            if (i < k) continue;
            for (Index j : idx.occurrences_of_key(key))
                out.push_back({i - k + 1, j, AnchorClass::Unclassified});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    KmerIndex idx(S, k);
    return find_anchors(idx, S_prime);
}

AnchorClass classify_anchor(const Anchor& a, const HomologousPath& path, int k) {
    // A: the k diagonal points of the anchor; B: path points inside the
    // closed box [i, i+k-1] x [j, j+k-1]
    const Index x_lo = a.i, x_hi = a.i + k - 1;
    const Index y_lo = a.j, y_hi = a.j + k - 1;
    const size_t last = path.upper_bound_x(x_hi);
    Index in_box = 0;
    bool any_on_diag = false;
    bool corner_lo = false, corner_hi = false;
    for (size_t idx = path.lower_bound_x(x_lo); idx != last; ++idx) {
        const Point& pt = path.points[idx];
        if (pt.y < y_lo || pt.y > y_hi) continue;
        ++in_box;
        if (pt.x - pt.y == a.i - a.j) any_on_diag = true;
        if (pt.x == x_lo && pt.y == y_lo) corner_lo = true;
        if (pt.x == x_hi && pt.y == y_hi) corner_hi = true;
    }
    // A = B exactly when the box holds k path points and both anchor
    // endpoints are path corners (the path moves by unit steps, so k points
    // spanning corner to corner must be the diagonal itself)
    if (in_box == k && corner_lo && corner_hi) return AnchorClass::Homologous;
    if (in_box == 0 || !any_on_diag) {
        // A and B intersect only on the anchor diagonal; if no box point
        // lies on it the intersection is empty
        return AnchorClass::Spurious;
    }
    return AnchorClass::Clipping;
}

ClassCounts count_by_class(std::vector<Anchor>& anchors, const HomologousPath& path, int k) {
    ClassCounts counts;
    for (auto& a : anchors) {
        a.cls = classify_anchor(a, path, k);
        switch (a.cls) {
            case AnchorClass::Homologous: ++counts.homologous; break;
            case AnchorClass::Clipping: ++counts.clipping; break;
            default: ++counts.spurious; break;
        }
    }
    return counts;
}

void write_anchor_csv(std::ostream& os, const std::vector<Anchor>& anchors, int k) {
    os << "i,j,k,class\n";
    for (const auto& a : anchors)
        os << a.i << ',' << a.j << ',' << k << ',' << anchor_class_name(a.cls) << '\n';
}

} // namespace scew
