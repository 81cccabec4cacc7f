#include "scew/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "scew/chaining.hpp"
#include "scew/errors.hpp"
#include "scew/extension.hpp"
#include "scew/homology.hpp"
#include "scew/recoverability.hpp"
#include "scew/rng.hpp"
#include "scew/util.hpp"

namespace scew {

namespace fs = std::filesystem;
using json = nlohmann::json;

const char* sweep_mode_name(SweepMode mode) {
    return mode == SweepMode::Runtime ? "runtime" : "recoverability";
}

SweepMode sweep_mode_from_name(const std::string& name) {
    if (name == "recoverability") return SweepMode::Recoverability;
    if (name == "runtime") return SweepMode::Runtime;
    throw std::invalid_argument("unknown mode: " + name);
}

std::vector<int> SweepConfig::k_values() const {
    std::vector<int> ks;
    for (int k = k_min; k <= k_max; k += k_step) ks.push_back(k);
    return ks;
}

void SweepConfig::validate() const {
    if (theta_T_list.empty()) throw std::invalid_argument("theta_T list is empty");
    for (double t : theta_T_list)
        if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("theta_T must be in [0, 1)");
    if (gamma_list.empty()) throw std::invalid_argument("gamma list is empty");
    for (double g : gamma_list)
        if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("gamma must be in (0, 1)");
    if (k_min < 1 || k_max < k_min || k_step < 1)
        throw std::invalid_argument("bad k range");
    if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (sigma < 2) throw std::invalid_argument("sigma must be >= 2");
    if (epsilon < 0.0 || delta < 0.0) throw std::invalid_argument("epsilon/delta must be >= 0");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    if (strict_theta)
        for (double t : theta_T_list)
            if (t >= 0.159) throw std::invalid_argument("strict mode requires theta_T < 0.159");
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::invalid_argument("bad boolean: " + v);
}

std::string join_doubles(const std::vector<double>& xs) {
    std::string out;
    for (size_t t = 0; t < xs.size(); ++t) {
        if (t) out += ',';
        out += g12(xs[t]);
    }
    return out;
}

std::string sanitize_reason(std::string reason) {
    for (char& c : reason)
        if (c == ',' || c == '\n') c = ';';
    return reason;
}

} // namespace

SweepConfig parse_config(std::istream& is) {
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "mode") cfg.mode = sweep_mode_from_name(val);
            else if (key == "theta_T") cfg.theta_T_list = parse_double_list(val);
            else if (key == "gamma") cfg.gamma_list = parse_double_list(val);
            else if (key == "k_min") cfg.k_min = std::stoi(val);
            else if (key == "k_max") cfg.k_max = std::stoi(val);
            else if (key == "k_step") cfg.k_step = std::stoi(val);
            else if (key == "iterations") cfg.iterations = std::stoi(val);
            else if (key == "sigma") cfg.sigma = std::stoi(val);
            else if (key == "master_seed") cfg.master_seed = std::stoull(val);
            else if (key == "epsilon") cfg.epsilon = std::stod(val);
            else if (key == "delta") cfg.delta = std::stod(val);
            else if (key == "threads") cfg.threads = std::stoi(val);
            else if (key == "strict_theta") cfg.strict_theta = parse_bool(val);
            else throw std::invalid_argument("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": bad value for " + key);
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return parse_config(in);
}

void write_config(std::ostream& os, const SweepConfig& cfg) {
    os << "mode = " << sweep_mode_name(cfg.mode) << '\n'
       << "theta_T = " << join_doubles(cfg.theta_T_list) << '\n'
       << "gamma = " << join_doubles(cfg.gamma_list) << '\n'
       << "k_min = " << cfg.k_min << '\n'
       << "k_max = " << cfg.k_max << '\n'
       << "k_step = " << cfg.k_step << '\n'
       << "iterations = " << cfg.iterations << '\n'
       << "sigma = " << cfg.sigma << '\n'
       << "master_seed = " << cfg.master_seed << '\n'
       << "epsilon = " << g12(cfg.epsilon) << '\n'
       << "delta = " << g12(cfg.delta) << '\n'
       << "threads = " << cfg.threads << '\n'
       << "strict_theta = " << (cfg.strict_theta ? 1 : 0) << '\n';
}

MutationParams draw_channel_rates(double theta_T, double gamma, int sigma, bool strict,
                                  Rng& rng) {
    const double a = rng.next_double();
    const double b = rng.next_double();
    const double lo = std::min(a, b), hi = std::max(a, b);
    MutationParams params;
    params.theta_i = lo * theta_T;
    params.theta_d = (hi - lo) * theta_T;
    params.theta_s = theta_T - params.theta_i - params.theta_d;
    // rho'_i rides at its bound gamma; strict mode keeps the inequality sharp
    params.rho_i = strict ? std::max(0.0, gamma - 1e-9) : gamma;
    params.gamma = gamma;
    params.sigma = sigma;
    return params;
}

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

TrialRecord run_trial(const TrialParams& cell, uint64_t trial_index) {
    TrialRecord rec;
    rec.theta_T = cell.theta_T;
    rec.gamma = cell.gamma;
    rec.k = cell.k;
    rec.mode = cell.mode;
    rec.trial = trial_index;

    const ConstantsBundle constants =
        derive_constants_for_k(cell.sigma, cell.theta_T, cell.gamma, cell.k, cell.delta);
    rec.n = constants.n;
    rec.g_n = constants.g_n;
    const double exponent = (2.0 * constants.C_alpha + 1.0) / 2.0 + cell.epsilon;
    if (exponent >= 1.0)
        throw std::invalid_argument("m' exponent must stay below 1 (epsilon too large)");
    rec.m_prime = std::clamp<Index>(
        static_cast<Index>(std::llround(std::pow(static_cast<double>(rec.n), exponent))), 1,
        rec.n);

    rec.seed = derive_stream_seed(cell.master_seed,
                                  cell_tag(cell.theta_T, cell.gamma, cell.k,
                                           static_cast<int>(cell.mode)),
                                  trial_index);
    Rng rng(rec.seed);

    const Sequence S = generate_reference(rec.n, cell.sigma, rng);
    const MutationParams params =
        draw_channel_rates(cell.theta_T, cell.gamma, cell.sigma, cell.strict_theta, rng);
    rec.theta_s = params.theta_s;
    rec.theta_d = params.theta_d;
    rec.theta_i = params.theta_i;
    rec.rho_i = params.rho_i;
    rec.p = rng.uniform_int(0, rec.n - rec.m_prime);

    const SequencePair pair = mutate(S, rec.p, rec.m_prime, params, rng, cell.strict_theta);
    const Sequence& Sp = pair.S_prime;
    rec.m = Sp.size();

    try {
        if (rec.m < cell.k) throw DegenerateInput("mutated string shorter than k");
        const HomologousPath path = build_homologous_path(pair.script);
        const NonRecoverableSet U = non_recoverable(path, S, Sp);

        std::vector<Anchor> anchors;
        auto t0 = std::chrono::steady_clock::now();
        if (cell.mode == SweepMode::Runtime) {
            // reference is assumed pre-seeded: index construction untimed
            const KmerIndex index(S, cell.k);
            t0 = std::chrono::steady_clock::now();
            anchors = find_anchors(index, Sp);
        } else {
            anchors = find_anchors(S, Sp, cell.k);
        }
        rec.wall_seed_s = seconds_since(t0);

        const ClassCounts counts = count_by_class(anchors, path, cell.k);
        rec.anchors = static_cast<Index>(anchors.size());
        rec.homologous = counts.homologous;
        rec.clipping = counts.clipping;
        rec.spurious = counts.spurious;

        const auto t1 = std::chrono::steady_clock::now();
        const ChainResult chain = optimal_chain_fast(anchors, constants.xi);
        rec.wall_chain_s = seconds_since(t1);
        rec.chain_len = static_cast<Index>(chain.indices.size());
        rec.chain_score = chain.score;
        rec.chain_ops = chain.ops;
        const std::vector<Anchor> chain_anchors = materialize_chain(anchors, chain.indices);

        const RecoverabilityReport report = recoverability(path, U, chain_anchors, cell.k);
        rec.R_gen = report.generalized;
        rec.R_prequel = report.prequel;
        rec.U_size = report.u_size;
        rec.PH_size = report.ph_size;

        if (cell.mode == SweepMode::Runtime) {
            FullAlignOptions opt;
            opt.include_ends = true;
            opt.p = rec.p;
            opt.m_prime = rec.m_prime;
            const auto t2 = std::chrono::steady_clock::now();
            const Alignment aln = full_alignment(S, Sp, chain_anchors, cell.k, opt);
            rec.wall_extend_s = seconds_since(t2);
            rec.ext_cells = aln.accounting.ext_cells;
            rec.cells_touched = aln.cells_touched;
        } else {
            rec.ext_cells = count_extension_cells(chain_anchors, cell.k);
            rec.cells_touched = 0;
        }

        const EcResult ec = check_EC(pair.script, constants);
        const F2Result f2 = check_F2(anchors, path, cell.k, constants.g_n);
        rec.diag.ec_expansion_ok = ec.expansion_ok;
        rec.diag.ec_contraction_ok = ec.contraction_ok;
        rec.diag.f1_no_spurious = counts.spurious == 0;
        rec.diag.f2_max_gap_ok = f2.ok;
        rec.diag.max_homologous_gap = f2.max_gap;
        rec.diag.spurious_count = counts.spurious;
    } catch (const DegenerateInput& e) {
        rec.dropped = true;
        rec.drop_reason = e.what();
    }
    return rec;
}

void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(std::max<size_t>(1, count)));
    if (workers == 1) {
        for (size_t idx = 0; idx < count; ++idx) fn(idx);
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const size_t idx = next.fetch_add(1);
                if (idx >= count) return;
                try {
                    fn(idx);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

CellSummary summarize_cell(const TrialParams& cell, const std::vector<TrialRecord>& trials) {
    CellSummary s;
    s.theta_T = cell.theta_T;
    s.gamma = cell.gamma;
    s.k = cell.k;
    s.mode = cell.mode;
    s.trials = static_cast<int>(trials.size());
    double sum_m = 0, sum_rg = 0, sum_rp = 0, sum_ops = 0, sum_cells = 0, sum_wall = 0;
    int used = 0;
    for (const TrialRecord& t : trials) {
        if (s.n == 0) {
            s.n = t.n;
            s.m_prime = t.m_prime;
        }
        if (t.dropped) {
            ++s.dropped;
            continue;
        }
        ++used;
        sum_m += static_cast<double>(t.m);
        sum_rg += t.R_gen;
        sum_rp += t.R_prequel;
        sum_ops += static_cast<double>(t.chain_ops);
        sum_cells += static_cast<double>(t.ext_cells);
        sum_wall += t.wall_chain_s + t.wall_extend_s;
    }
    if (used > 0) {
        s.mean_m = sum_m / used;
        s.mean_R_gen = sum_rg / used;
        s.mean_R_prequel = sum_rp / used;
        s.mean_chain_ops = sum_ops / used;
        s.mean_ext_cells = sum_cells / used;
        s.mean_wall_chain_extend_s = sum_wall / used;
    }
    s.usable = s.trials > 0 &&
               static_cast<double>(s.dropped) <= 0.2 * static_cast<double>(s.trials);
    if (s.n >= 2 && used > 0) {
        const ConstantsBundle c =
            derive_constants_for_k(cell.sigma, cell.theta_T, cell.gamma, cell.k, cell.delta);
        s.predicted_runtime = s.mean_m * std::pow(static_cast<double>(s.n), c.C_alpha) *
                              std::log(static_cast<double>(s.n));
    }
    return s;
}

std::vector<SeriesFit> fit_series(const SweepConfig& config,
                                  const std::vector<CellSummary>& cells) {
    std::vector<SeriesFit> fits;
    for (double theta : config.theta_T_list) {
        for (double gamma : config.gamma_list) {
            SeriesFit sf;
            sf.mode = config.mode;
            sf.theta_T = theta;
            sf.gamma = gamma;
            std::vector<std::pair<double, double>> pts;
            double norm = 0.0;
            bool norm_set = false;
            for (const CellSummary& c : cells) {
                if (c.theta_T != theta || c.gamma != gamma) continue;
                if (!c.usable || c.trials == c.dropped) {
                    ++sf.skipped_points;
                    continue;
                }
                if (config.mode == SweepMode::Recoverability) {
                    const double x = c.mean_m;
                    const double y = 1.0 - c.mean_R_gen;
                    if (x > 0 && y > 0) {
                        pts.emplace_back(x, y);
                    } else {
                        ++sf.skipped_points;
                    }
                } else {
                    const double x = c.predicted_runtime;
                    const double y = c.mean_wall_chain_extend_s;
                    if (x > 0 && y > 0) {
                        pts.emplace_back(x, y);
                        if (!norm_set) {
                            norm = y / x;   // cells arrive in ascending k order
                            norm_set = true;
                        }
                    } else {
                        ++sf.skipped_points;
                    }
                }
            }
            sf.norm_constant = norm;
            if (pts.size() >= 3) {
                sf.fit = ols_loglog(pts);
            } else {
                sf.fit.n_points = static_cast<int>(pts.size());
                sf.fit.slope = std::numeric_limits<double>::quiet_NaN();
                sf.fit.intercept = std::numeric_limits<double>::quiet_NaN();
                sf.fit.slope_ci_lo = std::numeric_limits<double>::quiet_NaN();
                sf.fit.slope_ci_hi = std::numeric_limits<double>::quiet_NaN();
                sf.fit.r_squared = std::numeric_limits<double>::quiet_NaN();
            }
            fits.push_back(std::move(sf));
        }
    }
    return fits;
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    SweepResult result;
    result.config = config;

    std::vector<TrialParams> cell_list;
    for (double theta : config.theta_T_list)
        for (double gamma : config.gamma_list)
            for (int k : config.k_values()) {
                TrialParams cell;
                cell.mode = config.mode;
                cell.theta_T = theta;
                cell.gamma = gamma;
                cell.k = k;
                cell.sigma = config.sigma;
                cell.epsilon = config.epsilon;
                cell.delta = config.delta;
                cell.strict_theta = config.strict_theta;
                cell.master_seed = config.master_seed;
                cell_list.push_back(cell);
            }

    const size_t iters = static_cast<size_t>(config.iterations);
    const size_t total = cell_list.size() * iters;
    result.trials.assign(total, {});
    parallel_for(total, config.threads, [&](size_t idx) {
        const size_t cell_idx = idx / iters;
        const uint64_t trial_idx = static_cast<uint64_t>(idx % iters);
        result.trials[idx] = run_trial(cell_list[cell_idx], trial_idx);
    });

    for (size_t c = 0; c < cell_list.size(); ++c) {
        const auto begin = result.trials.begin() + static_cast<ptrdiff_t>(c * iters);
        std::vector<TrialRecord> slice(begin, begin + static_cast<ptrdiff_t>(iters));
        result.cells.push_back(summarize_cell(cell_list[c], slice));
    }
    result.fits = fit_series(config, result.cells);
    return result;
}

void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& trials) {
    os << "theta_T,gamma,k,mode,trial,seed,n,m_prime,m,p,theta_s,theta_d,theta_i,rho_i,"
          "anchors,homologous,clipping,spurious,chain_len,chain_score,chain_ops,ext_cells,"
          "cells_touched,R_gen,R_prequel,U_size,PH_size,ec_exp,ec_con,f1,f2,max_gap,g_n,"
          "dropped,reason\n";
    for (const TrialRecord& t : trials) {
        os << g12(t.theta_T) << ',' << g12(t.gamma) << ',' << t.k << ','
           << sweep_mode_name(t.mode) << ',' << t.trial << ',' << t.seed << ',' << t.n << ','
           << t.m_prime << ',' << t.m << ',' << t.p << ',' << g12(t.theta_s) << ','
           << g12(t.theta_d) << ',' << g12(t.theta_i) << ',' << g12(t.rho_i) << ','
           << t.anchors << ',' << t.homologous << ',' << t.clipping << ',' << t.spurious << ','
           << t.chain_len << ',' << g12(t.chain_score) << ',' << t.chain_ops << ','
           << t.ext_cells << ',' << t.cells_touched << ',' << g12(t.R_gen) << ','
           << g12(t.R_prequel) << ',' << t.U_size << ',' << t.PH_size << ','
           << int(t.diag.ec_expansion_ok) << ',' << int(t.diag.ec_contraction_ok) << ','
           << int(t.diag.f1_no_spurious) << ',' << int(t.diag.f2_max_gap_ok) << ','
           << t.diag.max_homologous_gap << ',' << g12(t.g_n) << ',' << int(t.dropped) << ','
           << sanitize_reason(t.drop_reason) << '\n';
    }
}

void write_timings_csv(std::ostream& os, const std::vector<TrialRecord>& trials) {
    os << "theta_T,gamma,k,mode,trial,wall_seed_s,wall_chain_s,wall_extend_s\n";
    for (const TrialRecord& t : trials) {
        os << g12(t.theta_T) << ',' << g12(t.gamma) << ',' << t.k << ','
           << sweep_mode_name(t.mode) << ',' << t.trial << ',' << g12(t.wall_seed_s) << ','
           << g12(t.wall_chain_s) << ',' << g12(t.wall_extend_s) << '\n';
    }
}

void write_cells_csv(std::ostream& os, const std::vector<CellSummary>& cells) {
    os << "theta_T,gamma,k,mode,n,m_prime,trials,dropped,usable,mean_m,mean_R_gen,"
          "mean_R_prequel,mean_chain_ops,mean_ext_cells,mean_wall_chain_extend_s,"
          "predicted_runtime\n";
    for (const CellSummary& c : cells) {
        os << g12(c.theta_T) << ',' << g12(c.gamma) << ',' << c.k << ','
           << sweep_mode_name(c.mode) << ',' << c.n << ',' << c.m_prime << ',' << c.trials
           << ',' << c.dropped << ',' << int(c.usable) << ',' << g12(c.mean_m) << ','
           << g12(c.mean_R_gen) << ',' << g12(c.mean_R_prequel) << ',' << g12(c.mean_chain_ops)
           << ',' << g12(c.mean_ext_cells) << ',' << g12(c.mean_wall_chain_extend_s) << ','
           << g12(c.predicted_runtime) << '\n';
    }
}

void write_fits_csv(std::ostream& os, const std::vector<SeriesFit>& fits) {
    os << "mode,theta_T,gamma,slope,ci_lo,ci_hi,intercept,r_squared,points,skipped,"
          "norm_constant,reference\n";
    for (const SeriesFit& f : fits) {
        const double reference = f.mode == SweepMode::Recoverability ? -0.5 : 1.0;
        os << sweep_mode_name(f.mode) << ',' << g12(f.theta_T) << ',' << g12(f.gamma) << ','
           << g12(f.fit.slope) << ',' << g12(f.fit.slope_ci_lo) << ',' << g12(f.fit.slope_ci_hi)
           << ',' << g12(f.fit.intercept) << ',' << g12(f.fit.r_squared) << ','
           << f.fit.n_points << ',' << f.skipped_points << ',' << g12(f.norm_constant) << ','
           << g12(reference) << '\n';
    }
}

namespace {

std::string series_dat_name(const SeriesFit& f) {
    std::ostringstream name;
    name << (f.mode == SweepMode::Recoverability ? "recov" : "runtime") << "_theta"
         << g12(f.theta_T) << "_gamma" << g12(f.gamma) << ".dat";
    return name.str();
}

} // namespace

void write_sweep_outputs(const std::string& out_dir, const SweepResult& result) {
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    {
        std::ofstream os(dir / "trials.csv");
        write_trials_csv(os, result.trials);
    }
    {
        std::ofstream os(dir / "timings.csv");
        write_timings_csv(os, result.trials);
    }
    {
        std::ofstream os(dir / "cells.csv");
        write_cells_csv(os, result.cells);
    }
    {
        std::ofstream os(dir / "fits.csv");
        write_fits_csv(os, result.fits);
    }
    {
        std::ofstream os(dir / "diagnostics.csv");
        write_diagnostics_csv_header(os);
        for (size_t i = 0; i < result.trials.size(); ++i)
            write_diagnostics_csv_row(os, i, result.trials[i].diag, result.trials[i].g_n);
    }

    std::vector<std::string> dat_files;
    for (const SeriesFit& f : result.fits) {
        const std::string name = series_dat_name(f);
        dat_files.push_back(name);
        std::ofstream os(dir / name);
        for (const CellSummary& c : result.cells) {
            if (c.theta_T != f.theta_T || c.gamma != f.gamma) continue;
            if (!c.usable || c.trials == c.dropped) continue;
            if (f.mode == SweepMode::Recoverability)
                os << g12(c.mean_m) << ' ' << g12(1.0 - c.mean_R_gen) << '\n';
            else
                os << g12(c.predicted_runtime) << ' ' << g12(c.mean_wall_chain_extend_s) << '\n';
        }
    }

    json manifest;
    manifest["tool"] = "scew";
    manifest["version"] = "0.1.0";
    manifest["master_seed"] = result.config.master_seed;
    manifest["mode"] = sweep_mode_name(result.config.mode);
    {
        std::ostringstream cfg;
        write_config(cfg, result.config);
        manifest["config_text"] = cfg.str();
    }
    manifest["config"] = {
        {"mode", sweep_mode_name(result.config.mode)},
        {"theta_T", result.config.theta_T_list},
        {"gamma", result.config.gamma_list},
        {"k_min", result.config.k_min},
        {"k_max", result.config.k_max},
        {"k_step", result.config.k_step},
        {"iterations", result.config.iterations},
        {"sigma", result.config.sigma},
        {"master_seed", result.config.master_seed},
        {"epsilon", result.config.epsilon},
        {"delta", result.config.delta},
        {"threads", result.config.threads},
        {"strict_theta", result.config.strict_theta},
    };
    manifest["outputs"] = {{"trials", "trials.csv"},
                           {"timings", "timings.csv"},
                           {"cells", "cells.csv"},
                           {"fits", "fits.csv"},
                           {"plots", dat_files}};
    manifest["cells"] = result.cells.size();
    manifest["trials"] = result.trials.size();
    {
        std::ofstream os(dir / "manifest.json");
        os << manifest.dump(2) << '\n';
    }
}

SweepConfig read_manifest_config(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
    json manifest;
    in >> manifest;
    if (!manifest.contains("config"))
        throw std::invalid_argument("manifest has no config block");
    const json& c = manifest["config"];
    SweepConfig cfg;
    cfg.mode = sweep_mode_from_name(c.at("mode").get<std::string>());
    cfg.theta_T_list = c.at("theta_T").get<std::vector<double>>();
    cfg.gamma_list = c.at("gamma").get<std::vector<double>>();
    cfg.k_min = c.at("k_min").get<int>();
    cfg.k_max = c.at("k_max").get<int>();
    cfg.k_step = c.at("k_step").get<int>();
    cfg.iterations = c.at("iterations").get<int>();
    cfg.sigma = c.at("sigma").get<int>();
    cfg.master_seed = c.at("master_seed").get<uint64_t>();
    cfg.epsilon = c.at("epsilon").get<double>();
    cfg.delta = c.at("delta").get<double>();
    cfg.threads = c.at("threads").get<int>();
    cfg.strict_theta = c.at("strict_theta").get<bool>();
    cfg.validate();
    return cfg;
}

} // namespace scew
