#include "scew/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include <boost/math/distributions/students_t.hpp>

#include "scew/util.hpp"

namespace scew {

namespace {

ConstantsBundle constants_base(int sigma, double theta_T, double gamma, double delta) {
    if (sigma < 2) throw std::invalid_argument("sigma must be >= 2");
    if (!(theta_T >= 0.0 && theta_T < 1.0)) throw std::invalid_argument("theta_T must be in [0, 1)");
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must be in (0, 1)");
    if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");

    ConstantsBundle c;
    c.sigma = sigma;
    c.theta_T = theta_T;
    c.gamma = gamma;
    c.delta = delta;

    const double ln_sigma = std::log(static_cast<double>(sigma));
    c.alpha = -std::log1p(-theta_T) / ln_sigma;
    if (c.alpha >= 0.5) throw std::invalid_argument("1 - 2*alpha must stay positive");
    c.C = 3.0 / (1.0 - 2.0 * c.alpha);
    if (delta > 0.0) {
        if (c.alpha <= 0.0) throw std::invalid_argument("delta needs alpha > 0");
        c.C += delta / c.alpha;
    }
    c.C_alpha = c.C * c.alpha;
    c.beta = 1.0 / ln_sigma;
    c.t0 = 0.5 * std::log(9.0 / (1.0 + 8.0 * gamma));
    c.c0 = std::max(c.t0, 21.0 / c.beta);
    c.c_alpha_bound = 3.15 * theta_T;
    c.c_alpha_bound_ok = theta_T > 0.0 && c.C_alpha < c.c_alpha_bound;
    c.strict_rate_warning = theta_T >= 0.159;
    return c;
}

void fill_scale_fields(ConstantsBundle& c, int k, Index n, double theta_d) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (theta_d < 0.0) theta_d = c.theta_T;
    c.k = k;
    c.n = n;
    c.xi = 1.0 / static_cast<double>(n);
    c.g_n = (50.0 * k / (8.0 * std::pow(1.0 - c.theta_T, k))) *
            std::log(static_cast<double>(n));
    c.expansion_threshold = (1.0 / c.t0) * (2.0 / c.beta + 1.0) * k;
    c.contraction_block = static_cast<Index>(std::ceil(21.0 * k / c.beta));
    c.contraction_threshold = (1.0 - theta_d) * static_cast<double>(c.contraction_block) / 2.0;
}

} // namespace

ConstantsBundle derive_constants(int sigma, double theta_T, double gamma, Index n,
                                 double delta, double theta_d) {
    ConstantsBundle c = constants_base(sigma, theta_T, gamma, delta);
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    const int k = static_cast<int>(
        std::llround(c.C * std::log(static_cast<double>(n)) / std::log(double(sigma))));
    fill_scale_fields(c, std::max(1, k), n, theta_d);
    return c;
}

ConstantsBundle derive_constants_for_k(int sigma, double theta_T, double gamma, int k,
                                       double delta, double theta_d) {
    ConstantsBundle c = constants_base(sigma, theta_T, gamma, delta);
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const double n_real = std::pow(static_cast<double>(sigma), static_cast<double>(k) / c.C);
    const Index n = std::max<Index>(2, static_cast<Index>(std::llround(n_real)));
    fill_scale_fields(c, k, n, theta_d);
    return c;
}

EcResult check_EC(const EditScript& script, const ConstantsBundle& constants) {
    EcResult res;
    const Index mp = script.m_prime;
    const int k = constants.k;

    // per generative position: inserted length and deletion flag
    std::vector<Index> ins(mp + 1, 0);
    std::vector<uint8_t> del(mp + 1, 0);
    for (const EditRecord& rec : script.records) {
        const Index off = rec.pos - script.p;
        ins[off] += static_cast<Index>(rec.ins.size());
        if (rec.del) del[off] = 1;
    }

    if (mp >= k && k >= 1) {
        Index window = 0;
        for (Index q = 1; q <= mp; ++q) {
            window += ins[q];
            if (q > k) window -= ins[q - k];
            if (q >= k && static_cast<double>(window) > constants.expansion_threshold) {
                res.expansion_ok = false;
                break;
            }
        }
    }

    const Index block = constants.contraction_block;
    if (block >= 1 && mp >= block) {
        Index kept = 0;
        for (Index q = 1; q <= mp; ++q) {
            kept += del[q] ? 0 : 1;
            if (q > block) kept -= del[q - block] ? 0 : 1;
            if (q >= block && !(static_cast<double>(kept) > constants.contraction_threshold)) {
                res.contraction_ok = false;
                break;
            }
        }
    }
    return res;
}

F2Result check_F2(const std::vector<Anchor>& anchors, const HomologousPath& path, int k,
                  double g_n) {
    F2Result res;
    const Index lo = path.p + 1;
    const Index hi = path.p + path.m_prime - k + 1;   // last possible anchor start
    if (hi < lo) return res;                          // region shorter than k

    Index prev = lo - 1;
    Index max_gap = 0;
    for (const Anchor& a : anchors) {
        if (a.cls != AnchorClass::Homologous) continue;
        if (a.i < lo || a.i > hi) continue;
        if (a.i > prev) {
            max_gap = std::max(max_gap, a.i - prev - 1);
            prev = a.i;
        }
    }
    max_gap = std::max(max_gap, hi - prev);
    res.max_gap = max_gap;
    res.ok = static_cast<double>(max_gap) <= g_n;
    return res;
}

namespace {

// x in [lo, hi] with f_inverse(y) landing inside [lo, hi] for some y in
// [y_lo, y_hi]; intervals are k long, so a direct scan is O(k)
bool preimage_hits(const CorrespondenceMap& f, Index y_lo, Index y_hi, Index x_lo, Index x_hi) {
    for (Index y = std::max<Index>(1, y_lo); y <= std::min(f.m, y_hi); ++y) {
        const Index x = f.inverse(y);
        if (x != 0 && x >= x_lo && x <= x_hi) return true;
    }
    return false;
}

} // namespace

bool check_anchor_independence(const Anchor& a, const Anchor& b, const CorrespondenceMap& f,
                               int k) {
    const Index i = a.i, j = a.j, h = b.i, l = b.j;
    const auto dist = [](Index u, Index v) { return u > v ? u - v : v - u; };
    const bool separated = dist(i, h) >= k || dist(j, l) >= k;
    if (!separated) return false;
    const bool a_clear = !preimage_hits(f, l, l + k - 1, i, i + k - 1);
    const bool b_clear = !preimage_hits(f, j, j + k - 1, h, h + k - 1);
    return a_clear || b_clear;
}

std::vector<std::pair<Index, Index>> anchor_match_vars(const Anchor& a, int k) {
    std::vector<std::pair<Index, Index>> vars;
    vars.reserve(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t) vars.emplace_back(a.i + t, a.j + t);
    return vars;
}

namespace {

struct UnionFind {
    std::unordered_map<int64_t, int64_t> parent;

    int64_t find(int64_t v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent.emplace(v, v);
            return v;
        }
        while (it->second != v) {
            const int64_t next = it->second;
            auto up = parent.find(next);
            it->second = up->second;
            v = next;
            it = up;
        }
        return v;
    }

    // returns false if u and v were already connected
    bool unite(int64_t u, int64_t v) {
        const int64_t ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

} // namespace

bool match_graph_acyclic(const std::vector<std::pair<Index, Index>>& match_vars,
                         const CorrespondenceMap& f) {
    std::vector<std::pair<Index, Index>> edges;
    edges.reserve(match_vars.size() + static_cast<size_t>(f.n));
    for (Index x = 1; x <= f.n; ++x) {
        const Index y = f.forward(x);
        if (y != 0) edges.emplace_back(x, y);
    }
    edges.insert(edges.end(), match_vars.begin(), match_vars.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    UnionFind uf;
    for (const auto& [x, y] : edges) {
        // S nodes on even keys, S' nodes on odd keys
        if (!uf.unite(2 * x, 2 * y + 1)) return false;
    }
    return true;
}

static RegressionFit ols_core(const std::vector<std::pair<double, double>>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw std::invalid_argument("need at least 3 points for a fit");
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) mx += x, my += y;
    mx /= n, my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (!(sxx > 0)) throw std::invalid_argument("degenerate x spread in regression");

    RegressionFit fit;
    fit.n_points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ssr = 0;
    for (const auto& [x, y] : pts) {
        const double e = y - (fit.intercept + fit.slope * x);
        ssr += e * e;
    }
    fit.r_squared = syy > 0 ? 1.0 - ssr / syy : 1.0;
    const double s2 = ssr / (n - 2);
    const double se = std::sqrt(std::max(0.0, s2 / sxx));
    boost::math::students_t dist(n - 2);
    const double tq = boost::math::quantile(dist, 0.975);
    fit.slope_ci_lo = fit.slope - tq * se;
    fit.slope_ci_hi = fit.slope + tq * se;
    return fit;
}

RegressionFit ols_linear(const std::vector<std::pair<double, double>>& points) {
    return ols_core(points);
}

RegressionFit ols_loglog(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (const auto& [x, y] : points) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument("log-log fit needs positive coordinates");
        logs.emplace_back(std::log(x), std::log(y));
    }
    return ols_core(logs);
}

void write_diagnostics_csv_header(std::ostream& os) {
    os << "trial,ec_exp,ec_con,f1,f2,max_gap,g_n,spurious_count\n";
}

void write_diagnostics_csv_row(std::ostream& os, uint64_t trial, const DiagnosticReport& d,
                               double g_n) {
    os << trial << ',' << int(d.ec_expansion_ok) << ',' << int(d.ec_contraction_ok) << ','
       << int(d.f1_no_spurious) << ',' << int(d.f2_max_gap_ok) << ',' << d.max_homologous_gap
       << ',' << g12(g_n) << ',' << d.spurious_count << '\n';
}

} // namespace scew
