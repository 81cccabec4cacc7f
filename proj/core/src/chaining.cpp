#include "scew/chaining.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace scew {

bool is_valid_chain(const std::vector<Anchor>& anchors, const std::vector<int>& chain) {
    for (size_t t = 0; t < chain.size(); ++t) {
        if (chain[t] < 0 || static_cast<size_t>(chain[t]) >= anchors.size()) return false;
        if (t == 0) continue;
        const Anchor& prev = anchors[chain[t - 1]];
        const Anchor& cur = anchors[chain[t]];
        if (!(prev.i < cur.i && prev.j <= cur.j)) return false;
    }
    return true;
}

double score_chain(const std::vector<Anchor>& anchors, const std::vector<int>& chain, double xi) {
    if (chain.empty()) return 0.0;
    const Anchor& first = anchors[chain.front()];
    const Anchor& last = anchors[chain.back()];
    return static_cast<double>(chain.size()) -
           xi * static_cast<double>((last.i - first.i) + (last.j - first.j));
}

namespace {

struct GEntry {
    double g = -std::numeric_limits<double>::infinity();
    int idx = std::numeric_limits<int>::max();
};

// strict total order; equal g resolves toward the smaller anchor index so
// every optimizer picks the same predecessor
inline bool better(const GEntry& a, const GEntry& b) {
    return a.g > b.g || (a.g == b.g && a.idx < b.idx);
}

// both DPs must evaluate dp through this one expression: chains compare
// equal across implementations only if the rounding matches
inline double dp_value(double s, double best_g) { return 1.0 - s + std::max(s, best_g); }

void require_sorted(const std::vector<Anchor>& anchors) {
    if (!std::is_sorted(anchors.begin(), anchors.end()))
        throw std::invalid_argument("anchors must be sorted by (i, j)");
}

ChainResult backtrack(const std::vector<Anchor>& anchors, const std::vector<double>& dp,
                      const std::vector<int>& parent, uint64_t ops) {
    ChainResult res;
    res.ops = ops;
    if (anchors.empty()) return res;
    int best = -1;
    for (int v = 0; v < static_cast<int>(anchors.size()); ++v)
        if (best < 0 || dp[v] > dp[best] + kChainScoreTol) best = v;
    for (int v = best; v >= 0; v = parent[v]) res.indices.push_back(v);
    std::reverse(res.indices.begin(), res.indices.end());
    res.score = dp[best];
    return res;
}

// prefix-max Fenwick tree over compressed j ranks
class MaxFenwick {
public:
    explicit MaxFenwick(int n) : tree_(n + 1) {}

    void update(int r, const GEntry& val, uint64_t& ops) {
        for (; r < static_cast<int>(tree_.size()); r += r & -r) {
            ++ops;
            if (better(val, tree_[r])) tree_[r] = val;
        }
    }

    GEntry query(int r, uint64_t& ops) const {
        GEntry best;
        for (; r > 0; r -= r & -r) {
            ++ops;
            if (better(tree_[r], best)) best = tree_[r];
        }
        return best;
    }

private:
    std::vector<GEntry> tree_;
};

} // namespace

ChainResult optimal_chain_quadratic(const std::vector<Anchor>& anchors, double xi) {
    require_sorted(anchors);
    const int n = static_cast<int>(anchors.size());
    std::vector<double> dp(n), g(n);
    std::vector<int> parent(n, -1);
    uint64_t ops = 0;
    for (int v = 0; v < n; ++v) {
        GEntry best;
        for (int u = 0; u < v; ++u) {
            ++ops;
            if (anchors[u].i < anchors[v].i && anchors[u].j <= anchors[v].j &&
                better({g[u], u}, best))
                best = {g[u], u};
        }
        const double s = xi * static_cast<double>(anchors[v].i + anchors[v].j);
        dp[v] = dp_value(s, best.g);
        if (best.idx < n && best.g > s) parent[v] = best.idx;
        g[v] = dp[v] + s;
    }
    return backtrack(anchors, dp, parent, ops);
}

ChainResult optimal_chain_fast(const std::vector<Anchor>& anchors, double xi) {
    require_sorted(anchors);
    const int n = static_cast<int>(anchors.size());
    if (n == 0) return {};

    std::vector<Index> js(n);
    for (int v = 0; v < n; ++v) js[v] = anchors[v].j;
    std::sort(js.begin(), js.end());
    js.erase(std::unique(js.begin(), js.end()), js.end());
    auto rank_of = [&](Index j) {
        return static_cast<int>(std::lower_bound(js.begin(), js.end(), j) - js.begin()) + 1;
    };

    MaxFenwick fen(static_cast<int>(js.size()));
    std::vector<double> dp(n), g(n);
    std::vector<int> parent(n, -1);
    uint64_t ops = 0;

    for (int lo = 0; lo < n;) {
        int hi = lo;
        while (hi < n && anchors[hi].i == anchors[lo].i) ++hi;
        // query the whole equal-i batch before inserting any of it, so
        // predecessors always have strictly smaller i
        for (int v = lo; v < hi; ++v) {
            GEntry best = fen.query(rank_of(anchors[v].j), ops);
            const double s = xi * static_cast<double>(anchors[v].i + anchors[v].j);
            dp[v] = dp_value(s, best.g);
            if (best.idx < n && best.g > s) parent[v] = best.idx;
            g[v] = dp[v] + s;
        }
        for (int v = lo; v < hi; ++v) fen.update(rank_of(anchors[v].j), {g[v], v}, ops);
        lo = hi;
    }
    return backtrack(anchors, dp, parent, ops);
}

namespace {

struct DfsState {
    const std::vector<Anchor>* anchors;
    double xi;
    std::vector<int> chain;
    std::vector<int> best_chain;
    double best_score;
    uint64_t ops;
};

void dfs_extend(DfsState& st) {
    ++st.ops;
    const auto& anchors = *st.anchors;
    const Anchor& first = anchors[st.chain.front()];
    const Anchor& last = anchors[st.chain.back()];
    const double score = static_cast<double>(st.chain.size()) -
                         st.xi * static_cast<double>((last.i - first.i) + (last.j - first.j));
    if (score > st.best_score + kChainScoreTol) {
        st.best_score = score;
        st.best_chain = st.chain;
    }
    for (int v = st.chain.back() + 1; v < static_cast<int>(anchors.size()); ++v) {
        if (anchors[v].i > last.i && anchors[v].j >= last.j) {
            st.chain.push_back(v);
            dfs_extend(st);
            st.chain.pop_back();
        }
    }
}

} // namespace

ChainResult brute_force_optimal(const std::vector<Anchor>& anchors, double xi) {
    require_sorted(anchors);
    ChainResult res;
    if (anchors.empty()) return res;
    DfsState st{&anchors, xi, {}, {}, -std::numeric_limits<double>::infinity(), 0};
    for (int u = 0; u < static_cast<int>(anchors.size()); ++u) {
        st.chain.assign(1, u);
        dfs_extend(st);
    }
    res.indices = st.best_chain;
    res.score = st.best_score;
    res.ops = st.ops;
    return res;
}

void write_chain_csv(std::ostream& os, const std::vector<Anchor>& anchors,
                     const ChainResult& result) {
    os << "ord,i,j\n";
    for (size_t t = 0; t < result.indices.size(); ++t) {
        const Anchor& a = anchors[result.indices[t]];
        os << (t + 1) << ',' << a.i << ',' << a.j << '\n';
    }
}

} // namespace scew
