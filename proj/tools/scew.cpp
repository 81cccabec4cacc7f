#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scew/analysis.hpp"
#include "scew/chaining.hpp"
#include "scew/errors.hpp"
#include "scew/extension.hpp"
#include "scew/fasta.hpp"
#include "scew/harness.hpp"
#include "scew/homology.hpp"
#include "scew/mutation.hpp"
#include "scew/recoverability.hpp"
#include "scew/rng.hpp"
#include "scew/seeding.hpp"
#include "scew/sequence.hpp"
#include "scew/util.hpp"

namespace fs = std::filesystem;
using namespace scew;

namespace {

struct GlobalOpts {
    uint64_t seed = 1;
    bool seed_set = false;
    std::string config_path;
    std::string out_dir = ".";
    bool strict_theta = false;
    bool strict_set = false;
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option_function<uint64_t>(
        "--seed", [&g](const uint64_t& v) { g.seed = v; g.seed_set = true; }, "master seed");
    cmd->add_option("--config", g.config_path, "sweep config file");
    cmd->add_option("--out", g.out_dir, "output directory");
    cmd->add_flag_callback(
        "--strict-theta", [&g] { g.strict_theta = true; g.strict_set = true; },
        "enforce theta_T < 0.159 and rho_i < gamma");
}

Sequence load_fasta_sequence(const std::string& path) {
    return read_fasta_single(path).seq;
}

struct LoadedInstance {
    Sequence S;
    Sequence Sp;
    EditScript script;
    HomologousPath path;
};

LoadedInstance load_instance(const std::string& ref_path, const std::string& query_path,
                             const std::string& script_path) {
    LoadedInstance inst;
    inst.S = load_fasta_sequence(ref_path);
    inst.script = read_script_file(script_path);
    inst.Sp = apply_script(inst.S, inst.script);
    if (!query_path.empty()) {
        const Sequence loaded = load_fasta_sequence(query_path);
        if (!(loaded == inst.Sp))
            throw DegenerateInput("query sequence does not match script applied to reference");
    }
    inst.path = build_homologous_path(inst.script);
    return inst;
}

int cmd_simulate(const GlobalOpts& g, Index n, double theta_T, double gamma, int sigma,
                 std::optional<double> theta_s, std::optional<double> theta_d,
                 std::optional<double> theta_i, std::optional<double> rho_i,
                 std::optional<Index> p_opt, std::optional<Index> m_prime_opt) {
    Rng rng(g.seed);
    const Sequence S = generate_reference(n, sigma, rng);

    MutationParams params;
    if (theta_s || theta_d || theta_i) {
        params.theta_s = theta_s.value_or(0.0);
        params.theta_d = theta_d.value_or(0.0);
        params.theta_i = theta_i.value_or(0.0);
        params.gamma = gamma;
        params.sigma = sigma;
        params.rho_i = rho_i.value_or(g.strict_theta ? std::max(0.0, gamma - 1e-9) : gamma);
    } else {
        params = draw_channel_rates(theta_T, gamma, sigma, g.strict_theta, rng);
        if (rho_i) params.rho_i = *rho_i;
    }

    const Index m_prime = m_prime_opt.value_or(n);
    Index p = 0;
    if (p_opt) {
        p = *p_opt;
    } else if (n > m_prime) {
        p = rng.uniform_int(0, n - m_prime);
    }

    const SequencePair pair = mutate(S, p, m_prime, params, rng, g.strict_theta);

    fs::create_directories(g.out_dir);
    const fs::path dir(g.out_dir);
    write_fasta_file((dir / "ref.fa").string(), "S", S);
    write_fasta_file((dir / "query.fa").string(), "S_prime", pair.S_prime);
    write_script_file((dir / "script.edits").string(), pair.script);

    std::cout << "n=" << n << " m_prime=" << m_prime << " m=" << pair.S_prime.size()
              << " p=" << p << " theta_s=" << g12(params.theta_s)
              << " theta_d=" << g12(params.theta_d) << " theta_i=" << g12(params.theta_i)
              << " rho_i=" << g12(params.rho_i) << '\n'
              << "wrote " << (dir / "ref.fa").string() << ", " << (dir / "query.fa").string()
              << ", " << (dir / "script.edits").string() << '\n';
    return 0;
}

int cmd_align(const GlobalOpts& g, const std::string& ref_path, const std::string& query_path,
              int k, std::optional<double> xi_opt, bool include_ends, std::optional<Index> p_opt,
              std::optional<Index> m_prime_opt) {
    const Sequence S = load_fasta_sequence(ref_path);
    const Sequence Sp = load_fasta_sequence(query_path);
    const double xi = xi_opt.value_or(1.0 / static_cast<double>(S.size()));

    std::vector<Anchor> anchors = find_anchors(S, Sp, k);
    const ChainResult chain = optimal_chain_fast(anchors, xi);
    const std::vector<Anchor> chain_anchors = materialize_chain(anchors, chain.indices);

    FullAlignOptions opt;
    if (include_ends) {
        if (!p_opt || !m_prime_opt)
            throw std::invalid_argument("--include-ends requires --p and --m-prime");
        opt.include_ends = true;
        opt.p = *p_opt;
        opt.m_prime = *m_prime_opt;
    }
    const Alignment aln = full_alignment(S, Sp, chain_anchors, k, opt);

    fs::create_directories(g.out_dir);
    const fs::path dir(g.out_dir);
    {
        std::ofstream os(dir / "anchors.csv");
        write_anchor_csv(os, anchors, k);
    }
    {
        std::ofstream os(dir / "chain.csv");
        write_chain_csv(os, anchors, chain);
    }
    {
        std::ofstream os(dir / "alignment.cigar");
        os << cigar_string(aln.ops) << '\n';
    }
    {
        std::ofstream os(dir / "gap_cells.tsv");
        write_gap_cells_tsv(os, aln);
    }
    std::cout << "anchors=" << anchors.size() << " chain_len=" << chain.indices.size()
              << " chain_score=" << g12(chain.score) << " chain_ops=" << chain.ops
              << " cost=" << aln.cost << " ext_cells=" << aln.accounting.ext_cells
              << " cells_touched=" << aln.cells_touched << '\n'
              << "span S[" << aln.x_begin << ".." << aln.x_end << "] x S'[" << aln.y_begin
              << ".." << aln.y_end << "]\n";
    return 0;
}

int cmd_classify(const GlobalOpts& g, const std::string& ref_path, const std::string& query_path,
                 const std::string& script_path, int k) {
    LoadedInstance inst = load_instance(ref_path, query_path, script_path);
    std::vector<Anchor> anchors = find_anchors(inst.S, inst.Sp, k);
    const ClassCounts counts = count_by_class(anchors, inst.path, k);

    fs::create_directories(g.out_dir);
    {
        std::ofstream os(fs::path(g.out_dir) / "anchors.csv");
        write_anchor_csv(os, anchors, k);
    }
    std::cout << "anchors=" << anchors.size() << " homologous=" << counts.homologous
              << " clipping=" << counts.clipping << " spurious=" << counts.spurious << '\n';
    return 0;
}

int cmd_recoverability(const GlobalOpts& g, const std::string& ref_path,
                       const std::string& query_path, const std::string& script_path, int k,
                       std::optional<double> xi_opt) {
    LoadedInstance inst = load_instance(ref_path, query_path, script_path);
    const NonRecoverableSet U = non_recoverable(inst.path, inst.S, inst.Sp);
    std::vector<Anchor> anchors = find_anchors(inst.S, inst.Sp, k);
    count_by_class(anchors, inst.path, k);
    const double xi = xi_opt.value_or(1.0 / static_cast<double>(inst.S.size()));
    const ChainResult chain = optimal_chain_fast(anchors, xi);
    const std::vector<Anchor> chain_anchors = materialize_chain(anchors, chain.indices);
    const RecoverabilityReport report = recoverability(inst.path, U, chain_anchors, k);

    fs::create_directories(g.out_dir);
    {
        std::ofstream os(fs::path(g.out_dir) / "recoverability.csv");
        write_recoverability_csv_header(os);
        write_recoverability_csv_row(os, 0, g.seed, 0.0, 0.0, k, inst.S.size(), inst.Sp.size(),
                                     report);
    }
    std::cout << "R_gen=" << g12(report.generalized) << " R_prequel=" << g12(report.prequel)
              << " U_size=" << report.u_size << " PH_size=" << report.ph_size
              << " covered=" << report.covered << '\n';
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& mode_override,
              std::optional<uint64_t> seed_override, std::optional<int> threads_override,
              std::optional<int> iterations_override) {
    if (g.config_path.empty()) throw std::invalid_argument("sweep needs --config");
    SweepConfig cfg = parse_config_file(g.config_path);
    if (!mode_override.empty()) cfg.mode = sweep_mode_from_name(mode_override);
    if (g.seed_set) cfg.master_seed = g.seed;
    if (seed_override) cfg.master_seed = *seed_override;
    if (threads_override) cfg.threads = *threads_override;
    if (iterations_override) cfg.iterations = *iterations_override;
    if (g.strict_set) cfg.strict_theta = g.strict_theta;
    cfg.validate();

    const SweepResult result = run_sweep(cfg);
    write_sweep_outputs(g.out_dir, result);

    int dropped = 0;
    for (const auto& t : result.trials) dropped += t.dropped ? 1 : 0;
    std::cout << "cells=" << result.cells.size() << " trials=" << result.trials.size()
              << " dropped=" << dropped << '\n';
    for (const SeriesFit& f : result.fits) {
        std::cout << sweep_mode_name(f.mode) << " theta_T=" << g12(f.theta_T)
                  << " gamma=" << g12(f.gamma) << " slope=" << g12(f.fit.slope) << " ci=["
                  << g12(f.fit.slope_ci_lo) << ", " << g12(f.fit.slope_ci_hi)
                  << "] r2=" << g12(f.fit.r_squared) << " points=" << f.fit.n_points << '\n';
    }
    std::cout << "outputs in " << g.out_dir << '\n';
    return 0;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int cmd_fit(const GlobalOpts& g, const std::string& cells_path) {
    std::ifstream in(cells_path);
    if (!in) throw std::invalid_argument("cannot open cells table: " + cells_path);
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("empty cells table");
    const std::vector<std::string> cols = split_csv_line(header);
    auto col = [&](const std::string& name) {
        for (size_t t = 0; t < cols.size(); ++t)
            if (cols[t] == name) return t;
        throw std::invalid_argument("cells table missing column: " + name);
    };
    const size_t c_theta = col("theta_T"), c_gamma = col("gamma"), c_k = col("k"),
                 c_mode = col("mode"), c_n = col("n"), c_mp = col("m_prime"),
                 c_trials = col("trials"), c_dropped = col("dropped"), c_usable = col("usable"),
                 c_mm = col("mean_m"), c_rg = col("mean_R_gen"), c_rp = col("mean_R_prequel"),
                 c_ops = col("mean_chain_ops"), c_cells = col("mean_ext_cells"),
                 c_wall = col("mean_wall_chain_extend_s"), c_pred = col("predicted_runtime");

    std::vector<CellSummary> cells;
    SweepConfig cfg;
    cfg.theta_T_list.clear();
    cfg.gamma_list.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        CellSummary c;
        c.theta_T = std::stod(f.at(c_theta));
        c.gamma = std::stod(f.at(c_gamma));
        c.k = std::stoi(f.at(c_k));
        c.mode = sweep_mode_from_name(f.at(c_mode));
        c.n = std::stoll(f.at(c_n));
        c.m_prime = std::stoll(f.at(c_mp));
        c.trials = std::stoi(f.at(c_trials));
        c.dropped = std::stoi(f.at(c_dropped));
        c.usable = f.at(c_usable) == "1";
        c.mean_m = std::stod(f.at(c_mm));
        c.mean_R_gen = std::stod(f.at(c_rg));
        c.mean_R_prequel = std::stod(f.at(c_rp));
        c.mean_chain_ops = std::stod(f.at(c_ops));
        c.mean_ext_cells = std::stod(f.at(c_cells));
        c.mean_wall_chain_extend_s = std::stod(f.at(c_wall));
        c.predicted_runtime = std::stod(f.at(c_pred));
        cells.push_back(c);
        cfg.mode = c.mode;
        if (std::find(cfg.theta_T_list.begin(), cfg.theta_T_list.end(), c.theta_T) ==
            cfg.theta_T_list.end())
            cfg.theta_T_list.push_back(c.theta_T);
        if (std::find(cfg.gamma_list.begin(), cfg.gamma_list.end(), c.gamma) ==
            cfg.gamma_list.end())
            cfg.gamma_list.push_back(c.gamma);
    }
    if (cells.empty()) throw std::invalid_argument("cells table has no rows");

    const std::vector<SeriesFit> fits = fit_series(cfg, cells);
    fs::create_directories(g.out_dir);
    {
        std::ofstream os(fs::path(g.out_dir) / "fits.csv");
        write_fits_csv(os, fits);
    }
    for (const SeriesFit& f : fits) {
        std::cout << sweep_mode_name(f.mode) << " theta_T=" << g12(f.theta_T)
                  << " gamma=" << g12(f.gamma) << " slope=" << g12(f.fit.slope) << " ci=["
                  << g12(f.fit.slope_ci_lo) << ", " << g12(f.fit.slope_ci_hi)
                  << "] points=" << f.fit.n_points << " reference=-0.5\n";
    }
    return 0;
}

int cmd_check_bounds(double theta_T, double gamma, std::optional<int> k_opt,
                     std::optional<Index> n_opt, int sigma, double delta, double theta_d) {
    ConstantsBundle c;
    if (k_opt) {
        c = derive_constants_for_k(sigma, theta_T, gamma, *k_opt, delta, theta_d);
    } else if (n_opt) {
        c = derive_constants(sigma, theta_T, gamma, *n_opt, delta, theta_d);
    } else {
        throw std::invalid_argument("check-bounds needs --k or --n");
    }
    std::cout << "sigma=" << c.sigma << " theta_T=" << g12(c.theta_T)
              << " gamma=" << g12(c.gamma) << '\n'
              << "alpha=" << g12(c.alpha) << " C=" << g12(c.C) << " C_alpha=" << g12(c.C_alpha)
              << " beta=" << g12(c.beta) << '\n'
              << "k=" << c.k << " n=" << c.n << " xi=" << g12(c.xi) << " g_n=" << g12(c.g_n)
              << '\n'
              << "t0=" << g12(c.t0) << " c0=" << g12(c.c0)
              << " expansion_threshold=" << g12(c.expansion_threshold)
              << " contraction_block=" << c.contraction_block
              << " contraction_threshold=" << g12(c.contraction_threshold) << '\n'
              << "C_alpha_bound=" << g12(c.c_alpha_bound)
              << " C_alpha_bound_ok=" << (c.c_alpha_bound_ok ? 1 : 0)
              << " strict_rate_warning=" << (c.strict_rate_warning ? 1 : 0) << '\n';
    const double rho = std::max(0.0, gamma - 1e-9);
    std::cout << "exp(t0)*rho_i=" << g12(std::exp(c.t0) * rho)
              << " (must stay < 1 for rho_i < gamma)\n";
    return 0;
}

int cmd_replay(const GlobalOpts& g, const std::string& script_path, const std::string& ref_path,
               const std::string& manifest_path, int k) {
    if (!manifest_path.empty()) {
        SweepConfig cfg = read_manifest_config(manifest_path);
        const SweepResult result = run_sweep(cfg);
        write_sweep_outputs(g.out_dir, result);
        std::cout << "replayed sweep: cells=" << result.cells.size()
                  << " trials=" << result.trials.size() << " outputs in " << g.out_dir << '\n';
        return 0;
    }
    if (script_path.empty() || ref_path.empty())
        throw std::invalid_argument("replay needs --manifest, or --script with --ref");

    LoadedInstance inst = load_instance(ref_path, "", script_path);
    const CorrespondenceMap f = correspondence(inst.path, inst.script, inst.S.size());

    std::cout << "S=" << to_dna(inst.S) << '\n' << "S_prime=" << to_dna(inst.Sp) << '\n';
    std::cout << "path=";
    for (size_t t = 0; t < inst.path.points.size(); ++t) {
        if (t) std::cout << ' ';
        std::cout << '(' << inst.path.points[t].x << ',' << inst.path.points[t].y << ')';
    }
    std::cout << '\n';
    std::cout << "f:";
    for (Index x = inst.path.p + 1; x <= inst.path.p + inst.path.m_prime; ++x) {
        const Index y = f.forward(x);
        std::cout << ' ' << x << "->";
        if (y == 0)
            std::cout << "null";
        else
            std::cout << y;
    }
    std::cout << '\n';

    std::vector<Anchor> anchors = find_anchors(inst.S, inst.Sp, k);
    const ClassCounts counts = count_by_class(anchors, inst.path, k);
    for (const Anchor& a : anchors)
        std::cout << "anchor (" << a.i << ',' << a.j << ") " << anchor_class_name(a.cls) << '\n';
    std::cout << "homologous=" << counts.homologous << " clipping=" << counts.clipping
              << " spurious=" << counts.spurious << '\n';

    fs::create_directories(g.out_dir);
    {
        std::ofstream os(fs::path(g.out_dir) / "anchors.csv");
        write_anchor_csv(os, anchors, k);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seed-chain-extend workbench"};
    app.require_subcommand(1);

    GlobalOpts g;

    // simulate
    auto* simulate = app.add_subcommand("simulate", "sample a reference and push it through the channel");
    Index sim_n = 1000;
    double sim_theta = 0.1, sim_gamma = 0.5;
    int sim_sigma = 4;
    std::optional<double> sim_ts, sim_td, sim_ti, sim_rho;
    std::optional<Index> sim_p, sim_mp;
    simulate->add_option("--n", sim_n, "reference length");
    simulate->add_option("--theta-t", sim_theta, "total mutation rate (split uniformly)");
    simulate->add_option("--gamma", sim_gamma, "insertion length bound gamma");
    simulate->add_option("--sigma", sim_sigma, "alphabet size (FASTA IO needs 4)");
    simulate->add_option("--theta-s", [&sim_ts](auto& v) { sim_ts = std::stod(v[0]); return true; }, "explicit substitution rate");
    simulate->add_option("--theta-d", [&sim_td](auto& v) { sim_td = std::stod(v[0]); return true; }, "explicit deletion rate");
    simulate->add_option("--theta-i", [&sim_ti](auto& v) { sim_ti = std::stod(v[0]); return true; }, "explicit insertion rate");
    simulate->add_option("--rho-i", [&sim_rho](auto& v) { sim_rho = std::stod(v[0]); return true; }, "insertion length parameter");
    simulate->add_option("--p", [&sim_p](auto& v) { sim_p = std::stoll(v[0]); return true; }, "generative offset");
    simulate->add_option("--m-prime", [&sim_mp](auto& v) { sim_mp = std::stoll(v[0]); return true; }, "generative length");
    add_global_opts(simulate, g);

    // align
    auto* align = app.add_subcommand("align", "anchors, optimal chain and gap-filled alignment");
    std::string al_ref, al_query;
    int al_k = 16;
    std::optional<double> al_xi;
    bool al_ends = false;
    std::optional<Index> al_p, al_mp;
    align->add_option("--ref", al_ref, "reference FASTA")->required();
    align->add_option("--query", al_query, "query FASTA")->required();
    align->add_option("--k", al_k, "anchor length");
    align->add_option("--xi", [&al_xi](auto& v) { al_xi = std::stod(v[0]); return true; }, "gap penalty (default 1/n)");
    align->add_flag("--include-ends", al_ends, "also align the prefix/suffix boxes");
    align->add_option("--p", [&al_p](auto& v) { al_p = std::stoll(v[0]); return true; }, "generative offset (for --include-ends)");
    align->add_option("--m-prime", [&al_mp](auto& v) { al_mp = std::stoll(v[0]); return true; }, "generative length (for --include-ends)");
    add_global_opts(align, g);

    // classify
    auto* classify = app.add_subcommand("classify", "classify anchors against the homologous path");
    std::string cl_ref, cl_query, cl_script;
    int cl_k = 16;
    classify->add_option("--ref", cl_ref, "reference FASTA")->required();
    classify->add_option("--query", cl_query, "query FASTA")->required();
    classify->add_option("--script", cl_script, "edit script")->required();
    classify->add_option("--k", cl_k, "anchor length");
    add_global_opts(classify, g);

    // recoverability
    auto* recov = app.add_subcommand("recoverability", "compute both recoverability metrics");
    std::string re_ref, re_query, re_script;
    int re_k = 16;
    std::optional<double> re_xi;
    recov->add_option("--ref", re_ref, "reference FASTA")->required();
    recov->add_option("--query", re_query, "query FASTA")->required();
    recov->add_option("--script", re_script, "edit script")->required();
    recov->add_option("--k", re_k, "anchor length");
    recov->add_option("--xi", [&re_xi](auto& v) { re_xi = std::stod(v[0]); return true; }, "gap penalty (default 1/n)");
    add_global_opts(recov, g);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a full recoverability or runtime sweep");
    std::string sw_mode;
    std::optional<uint64_t> sw_seed;
    std::optional<int> sw_threads, sw_iters;
    sweep->add_option("--mode", sw_mode, "recoverability | runtime (overrides config)");
    sweep->add_option("--master-seed", [&sw_seed](auto& v) { sw_seed = std::stoull(v[0]); return true; }, "override master seed");
    sweep->add_option("--threads", [&sw_threads](auto& v) { sw_threads = std::stoi(v[0]); return true; }, "override worker count");
    sweep->add_option("--iterations", [&sw_iters](auto& v) { sw_iters = std::stoi(v[0]); return true; }, "override iterations per cell");
    add_global_opts(sweep, g);

    // fit
    auto* fit = app.add_subcommand("fit", "refit slopes from a cells.csv table");
    std::string fit_cells;
    fit->add_option("--cells", fit_cells, "cells.csv from a sweep")->required();
    add_global_opts(fit, g);

    // check-bounds
    auto* bounds = app.add_subcommand("check-bounds", "derive constants and report bound checks");
    double cb_theta = 0.1, cb_gamma = 0.5, cb_delta = 0.0, cb_theta_d = -1.0;
    std::optional<int> cb_k;
    std::optional<Index> cb_n;
    int cb_sigma = 4;
    bounds->add_option("--theta-t", cb_theta, "total mutation rate");
    bounds->add_option("--gamma", cb_gamma, "insertion length bound");
    bounds->add_option("--k", [&cb_k](auto& v) { cb_k = std::stoi(v[0]); return true; }, "anchor length (derives n)");
    bounds->add_option("--n", [&cb_n](auto& v) { cb_n = std::stoll(v[0]); return true; }, "reference length (derives k)");
    bounds->add_option("--sigma", cb_sigma, "alphabet size");
    bounds->add_option("--delta", cb_delta, "extra slack on C");
    bounds->add_option("--theta-d", cb_theta_d, "deletion rate for the contraction threshold");
    add_global_opts(bounds, g);

    // replay
    auto* replay = app.add_subcommand("replay", "re-run a manifest sweep, or replay a script");
    std::string rp_script, rp_ref, rp_manifest;
    int rp_k = 3;
    replay->add_option("--script", rp_script, "edit script to replay");
    replay->add_option("--ref", rp_ref, "reference FASTA for the script");
    replay->add_option("--manifest", rp_manifest, "manifest.json from a previous sweep");
    replay->add_option("--k", rp_k, "anchor length for classification");
    add_global_opts(replay, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (simulate->parsed())
            return cmd_simulate(g, sim_n, sim_theta, sim_gamma, sim_sigma, sim_ts, sim_td,
                                sim_ti, sim_rho, sim_p, sim_mp);
        if (align->parsed())
            return cmd_align(g, al_ref, al_query, al_k, al_xi, al_ends, al_p, al_mp);
        if (classify->parsed()) return cmd_classify(g, cl_ref, cl_query, cl_script, cl_k);
        if (recov->parsed()) return cmd_recoverability(g, re_ref, re_query, re_script, re_k, re_xi);
        if (sweep->parsed()) return cmd_sweep(g, sw_mode, sw_seed, sw_threads, sw_iters);
        if (fit->parsed()) return cmd_fit(g, fit_cells);
        if (bounds->parsed())
            return cmd_check_bounds(cb_theta, cb_gamma, cb_k, cb_n, cb_sigma, cb_delta,
                                    cb_theta_d);
        if (replay->parsed()) return cmd_replay(g, rp_script, rp_ref, rp_manifest, rp_k);
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
