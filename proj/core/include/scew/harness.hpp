#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "scew/analysis.hpp"
#include "scew/mutation.hpp"
#include "scew/sequence.hpp"

namespace scew {

enum class SweepMode : int { Recoverability = 0, Runtime = 1 };

const char* sweep_mode_name(SweepMode mode);
SweepMode sweep_mode_from_name(const std::string& name);

struct SweepConfig {
    SweepMode mode = SweepMode::Recoverability;
    std::vector<double> theta_T_list{0.10};
    std::vector<double> gamma_list{0.5};
    int k_min = 20;
    int k_max = 36;
    int k_step = 2;
    int iterations = 100;
    int sigma = 4;
    uint64_t master_seed = 1;
    double epsilon = 0.0;   // extra slack on the m' exponent
    double delta = 0.0;     // extra slack on C (C = 3/(1-2a) + delta/a)
    int threads = 0;        // 0 = hardware concurrency
    bool strict_theta = true;

    std::vector<int> k_values() const;
    void validate() const;
};

SweepConfig parse_config(std::istream& is);
SweepConfig parse_config_file(const std::string& path);
void write_config(std::ostream& os, const SweepConfig& config);

struct TrialParams {
    SweepMode mode = SweepMode::Recoverability;
    double theta_T = 0.0;
    double gamma = 0.5;
    int k = 0;
    int sigma = 4;
    double epsilon = 0.0;
    double delta = 0.0;
    bool strict_theta = true;
    uint64_t master_seed = 1;
};

struct TrialRecord {
    // identity
    double theta_T = 0.0;
    double gamma = 0.0;
    int k = 0;
    SweepMode mode = SweepMode::Recoverability;
    uint64_t trial = 0;
    uint64_t seed = 0;
    // derived scales
    Index n = 0;
    Index m_prime = 0;
    Index m = 0;
    Index p = 0;
    // realized channel rates
    double theta_s = 0.0, theta_d = 0.0, theta_i = 0.0, rho_i = 0.0;
    // pipeline results
    Index anchors = 0, homologous = 0, clipping = 0, spurious = 0;
    Index chain_len = 0;
    double chain_score = 0.0;
    uint64_t chain_ops = 0;
    uint64_t ext_cells = 0;
    uint64_t cells_touched = 0;
    double R_gen = 0.0, R_prequel = 0.0;
    Index U_size = 0, PH_size = 0;
    DiagnosticReport diag;
    double g_n = 0.0;
    bool dropped = false;
    std::string drop_reason;
    // wall clock (never serialized into trials.csv)
    double wall_seed_s = 0.0, wall_chain_s = 0.0, wall_extend_s = 0.0;
};

TrialRecord run_trial(const TrialParams& cell, uint64_t trial_index);

struct CellSummary {
    double theta_T = 0.0;
    double gamma = 0.0;
    int k = 0;
    SweepMode mode = SweepMode::Recoverability;
    Index n = 0;
    Index m_prime = 0;
    int trials = 0;
    int dropped = 0;
    double mean_m = 0.0;
    double mean_R_gen = 0.0;
    double mean_R_prequel = 0.0;
    double mean_chain_ops = 0.0;
    double mean_ext_cells = 0.0;
    double mean_wall_chain_extend_s = 0.0;
    double predicted_runtime = 0.0;   // m * n^(C·alpha) * ln n
    bool usable = true;               // <= 20% drops
};

struct SeriesFit {
    SweepMode mode = SweepMode::Recoverability;
    double theta_T = 0.0;
    double gamma = 0.0;
    RegressionFit fit;
    int skipped_points = 0;   // unusable cells or nonpositive transforms
    double norm_constant = 0.0;   // runtime: measured/predicted at smallest k
};

struct SweepResult {
    SweepConfig config;
    std::vector<TrialRecord> trials;
    std::vector<CellSummary> cells;
    std::vector<SeriesFit> fits;
};

SweepResult run_sweep(const SweepConfig& config);

CellSummary summarize_cell(const TrialParams& cell, const std::vector<TrialRecord>& trials);
std::vector<SeriesFit> fit_series(const SweepConfig& config, const std::vector<CellSummary>& cells);

void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& trials);
void write_timings_csv(std::ostream& os, const std::vector<TrialRecord>& trials);
void write_cells_csv(std::ostream& os, const std::vector<CellSummary>& cells);
void write_fits_csv(std::ostream& os, const std::vector<SeriesFit>& fits);

// writes trials.csv, timings.csv, cells.csv, fits.csv, manifest.json and
// per-series .dat plot files into out_dir
void write_sweep_outputs(const std::string& out_dir, const SweepResult& result);

SweepConfig read_manifest_config(const std::string& manifest_path);

// deterministic helper: results keyed by index regardless of thread count
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

// stick-breaking split of theta_T into (theta_i, theta_d, theta_s),
// uniform on the scaled 2-simplex; rho'_i = gamma (nudged down in strict mode)
MutationParams draw_channel_rates(double theta_T, double gamma, int sigma, bool strict,
                                  Rng& rng);

} // namespace scew
