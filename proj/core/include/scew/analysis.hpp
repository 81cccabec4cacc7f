#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "scew/homology.hpp"
#include "scew/mutation.hpp"
#include "scew/seeding.hpp"
#include "scew/sequence.hpp"

namespace scew {

struct ConstantsBundle {
    int sigma = 4;
    double theta_T = 0.0;
    double gamma = 0.5;
    Index n = 0;
    double delta = 0.0;

    double alpha = 0.0;                 // -log_sigma(1 - theta_T)
    double C = 0.0;                     // 3/(1-2a) + delta/a
    double C_alpha = 0.0;
    int k = 0;                          // round(C * log_sigma n)
    double beta = 0.0;                  // log_sigma e
    double t0 = 0.0;                    // 0.5 * ln(9/(1+8*gamma))
    double xi = 0.0;                    // 1/n
    double g_n = 0.0;                   // (50k / (8(1-theta_T)^k)) * ln n
    double expansion_threshold = 0.0;   // (1/t0)(2/beta + 1)k
    Index contraction_block = 0;        // ceil(21k/beta)
    double contraction_threshold = 0.0; // (1 - theta_d) * block / 2
    double c0 = 0.0;                    // max(t0, 21/beta); carried, unused

    double c_alpha_bound = 0.0;         // 3.15 * theta_T
    bool c_alpha_bound_ok = false;      // C_alpha < 3.15 * theta_T
    bool strict_rate_warning = false;   // theta_T >= 0.159
};

// theta_d < 0 means "use theta_T" for the contraction threshold
ConstantsBundle derive_constants(int sigma, double theta_T, double gamma, Index n,
                                 double delta = 0.0, double theta_d = -1.0);

// inverse direction used by the sweeps: n = round(sigma^(k/C)) for a given k
ConstantsBundle derive_constants_for_k(int sigma, double theta_T, double gamma, int k,
                                       double delta = 0.0, double theta_d = -1.0);

struct EcResult {
    bool expansion_ok = true;
    bool contraction_ok = true;
};

// expansion: every k-window of generative positions has total inserted
// length <= expansion_threshold; contraction: every contraction_block
// window keeps more than contraction_threshold undeleted positions
EcResult check_EC(const EditScript& script, const ConstantsBundle& constants);

struct F2Result {
    bool ok = true;
    Index max_gap = 0;
};

// longest run of positions in [p+1, p+m'-k+1] that start no homologous
// anchor; anchors must be classified already
F2Result check_F2(const std::vector<Anchor>& anchors, const HomologousPath& path, int k,
                  double g_n);

bool check_anchor_independence(const Anchor& a, const Anchor& b, const CorrespondenceMap& f,
                               int k);

// undirected bipartite graph: correspondence edges (x, f(x)) for the whole
// map plus the given conditioning edges; true iff acyclic
bool match_graph_acyclic(const std::vector<std::pair<Index, Index>>& match_vars,
                         const CorrespondenceMap& f);

std::vector<std::pair<Index, Index>> anchor_match_vars(const Anchor& a, int k);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_ci_lo = 0.0;
    double slope_ci_hi = 0.0;
    double r_squared = 0.0;
    int n_points = 0;
};

// OLS of log(y) on log(x); CI is the two-sided 95% t-interval
RegressionFit ols_loglog(const std::vector<std::pair<double, double>>& points);

// same fit on already-transformed coordinates
RegressionFit ols_linear(const std::vector<std::pair<double, double>>& points);

struct DiagnosticReport {
    bool ec_expansion_ok = true;
    bool ec_contraction_ok = true;
    bool f1_no_spurious = true;
    bool f2_max_gap_ok = true;
    Index max_homologous_gap = 0;
    Index spurious_count = 0;
};

void write_diagnostics_csv_header(std::ostream& os);
void write_diagnostics_csv_row(std::ostream& os, uint64_t trial, const DiagnosticReport& d,
                               double g_n);

} // namespace scew
