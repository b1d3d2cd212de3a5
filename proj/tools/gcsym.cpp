#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gcsym/automorphism.hpp"
#include "gcsym/dsatur.hpp"
#include "gcsym/encoder.hpp"
#include "gcsym/harness.hpp"
#include "gcsym/lex_leader.hpp"
#include "gcsym/opb.hpp"
#include "gcsym/sbp.hpp"
#include "gcsym/solver.hpp"

using namespace gcsym;

namespace {

struct BuildOpts {
    std::string instance;
    int k = 0;  // 0 = choose_k(g, 20)
    std::string sbp;
};

void add_build_opts(CLI::App* cmd, BuildOpts& o) {
    cmd->add_option("instance", o.instance, "builtin name (myciel3, queen5_5, ...) or .col path")
        ->required();
    cmd->add_option("--k", o.k, "color count (0 = DSATUR bound capped at 20)");
    cmd->add_option("--sbp", o.sbp, "instance-independent SBPs: none or comma list of nu,ca,li,sc");
}

struct Built {
    Graph g;
    int k;
    Formula f;
};

Built build_formula(const BuildOpts& o) {
    InstanceSpec spec = resolve_instance(o.instance);
    Graph g = spec.graph ? *spec.graph : load_dimacs_col(spec.path);
    int k = o.k > 0 ? o.k : choose_k(g, 20);
    Formula f = encode_opt(g, k);
    SbpConfig cfg = o.sbp.empty() || o.sbp == "none" ? SbpConfig{} : SbpConfig::parse(o.sbp);
    apply_sbp(f, g, layout_of(g, k), cfg);
    return {std::move(g), k, std::move(f)};
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-coloring PB encoder, symmetry toolkit and solver"};
    app.require_subcommand(1);

    BuildOpts enc_opts;
    std::string enc_out;
    bool enc_cnf = false;
    auto* enc = app.add_subcommand("encode", "emit the OPB encoding of an instance");
    add_build_opts(enc, enc_opts);
    enc->add_option("--out", enc_out, "output file (default stdout)");
    enc->add_flag("--cnf", enc_cnf, "emit the decision problem as DIMACS CNF instead");

    BuildOpts sbp_opts;
    std::string sbp_out;
    auto* sbpc = app.add_subcommand("sbp", "emit the encoding with SBPs applied");
    add_build_opts(sbpc, sbp_opts);
    sbpc->add_option("--out", sbp_out, "output file (default stdout)");

    BuildOpts det_opts;
    std::string det_gen_out;
    long long det_budget = 200000;
    double det_timeout = 0.0;
    auto* det = app.add_subcommand("detect-sym", "detect formula symmetries");
    add_build_opts(det, det_opts);
    det->add_option("--node-budget", det_budget, "search node budget");
    det->add_option("--timeout", det_timeout, "detection time limit in seconds (0 = none)");
    det->add_option("--emit-generators", det_gen_out, "write generators in cycle notation");

    BuildOpts sol_opts;
    std::string sol_opb, sol_out;
    bool sol_inst_dep = false, sol_no_learning = false, sol_decide = false;
    double sol_timeout = 1000.0;
    unsigned sol_seed = 0;
    auto* sol = app.add_subcommand("solve", "minimize the number of colors");
    sol->add_option("instance", sol_opts.instance, "builtin name or .col path");
    sol->add_option("--opb", sol_opb, "solve a raw OPB file instead of an instance");
    sol->add_option("--k", sol_opts.k, "color count (0 = DSATUR bound capped at 20)");
    sol->add_option("--sbp", sol_opts.sbp, "instance-independent SBPs");
    sol->add_flag("--inst-dep", sol_inst_dep, "add lex-leader SBPs from detected symmetries");
    sol->add_option("--timeout", sol_timeout, "solve time limit in seconds");
    sol->add_option("--seed", sol_seed, "decision-order seed");
    sol->add_flag("--no-learning", sol_no_learning, "plain chronological DPLL");
    sol->add_flag("--decide", sol_decide, "decision query only (ignore the objective)");
    sol->add_option("--out", sol_out, "write the JSON result here too");

    std::vector<std::string> bench_instances;
    std::string bench_configs = "grid", bench_dep = "no", bench_out, bench_md, bench_keep;
    int bench_k = 20;
    double bench_timeout = 1000.0;
    unsigned bench_seed = 0;
    long long bench_budget = 200000;
    auto* bench = app.add_subcommand("bench", "run the SBP-config benchmark grid");
    bench->add_option("instances", bench_instances, "builtin names and/or .col paths")
        ->required();
    bench->add_option("--sbp", bench_configs,
                      "'grid' for the six standard rows, or one comma list");
    bench->add_option("--inst-dep", bench_dep, "no | yes | both");
    bench->add_option("--k", bench_k, "color count (0 = per-instance DSATUR bound)");
    bench->add_option("--timeout", bench_timeout, "per-solve time limit in seconds");
    bench->add_option("--seed", bench_seed, "decision-order seed");
    bench->add_option("--node-budget", bench_budget, "symmetry search node budget");
    bench->add_option("--out", bench_out, "CSV output path (appended incrementally)");
    bench->add_option("--md", bench_md, "Markdown summary output path");
    bench->add_option("--keep-encodings", bench_keep, "directory for per-cell OPB dumps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) {
            Built b = build_formula(enc_opts);
            if (enc_cnf) {
                if (!enc_opts.sbp.empty() && enc_opts.sbp != "none")
                    throw std::runtime_error("--cnf supports the plain decision encoding only");
                write_out(enc_out, emit_dimacs_cnf(encode_decision_cnf(b.g, b.k)));
            } else {
                write_out(enc_out, emit_opb(b.f));
            }
        } else if (sbpc->parsed()) {
            Built b = build_formula(sbp_opts);
            write_out(sbp_out, emit_opb(b.f));
        } else if (det->parsed()) {
            Built b = build_formula(det_opts);
            SymmetryOptions so;
            so.node_budget = det_budget;
            so.time_limit_s = det_timeout;
            SymmetryDetection d = detect_symmetries(b.f, so);
            std::cout << "instance " << det_opts.instance << " K=" << b.k << "\n"
                      << "generators " << d.summary.num_generators << "\n"
                      << "group_order " << d.summary.order.str() << "\n"
                      << "capped " << (d.summary.capped ? "yes" : "no") << "\n"
                      << "circular_chains " << (d.summary.circular_chain_warning ? "yes" : "no")
                      << "\n"
                      << "detect_time_s " << d.summary.detection_time_s << "\n";
            for (const auto& w : d.result.warnings) std::cerr << "warning: " << w << "\n";
            if (!det_gen_out.empty()) {
                std::string text;
                for (const auto& gen : d.result.generators) text += gen.to_cycles() + "\n";
                write_out(det_gen_out, text);
            }
        } else if (sol->parsed()) {
            Formula f;
            if (!sol_opb.empty()) {
                std::ifstream in(sol_opb);
                if (!in) throw std::runtime_error("cannot open " + sol_opb);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                f = parse_opb(text);
            } else if (!sol_opts.instance.empty()) {
                Built b = build_formula(sol_opts);
                f = std::move(b.f);
                if (sol_inst_dep) {
                    SymmetryDetection d = detect_symmetries(f);
                    add_lex_leader(f, d.result.generators);
                }
            } else {
                throw std::runtime_error("solve needs an instance or --opb");
            }
            SolverOptions so;
            so.time_limit_s = sol_timeout;
            so.seed = sol_seed;
            so.learning = !sol_no_learning;
            SolveResult res = sol_decide ? decide(f, so) : minimize(f, so);
            std::string json = res.to_json();
            std::cout << json << "\n";
            if (!sol_out.empty()) write_out(sol_out, json + "\n");
            if (res.status == SolveStatus::Timeout) return 2;
        } else if (bench->parsed()) {
            std::vector<InstanceSpec> specs;
            for (const auto& s : bench_instances) specs.push_back(resolve_instance(s));
            std::vector<SbpConfig> configs;
            if (bench_configs == "grid")
                configs = SbpConfig::experiment_rows();
            else
                configs.push_back(bench_configs.empty() || bench_configs == "none"
                                      ? SbpConfig{}
                                      : SbpConfig::parse(bench_configs));
            GridOptions go;
            go.K = bench_k;
            go.inst_dep = parse_inst_dep(bench_dep);
            go.solve_timeout_s = bench_timeout;
            go.seed = bench_seed;
            go.sym.node_budget = bench_budget;
            go.csv_path = bench_out;
            go.keep_encodings_dir = bench_keep;
            std::vector<BenchRecord> records = run_grid(specs, configs, go);
            if (bench_out.empty()) std::cout << records_to_csv(records);
            std::string md = records_to_markdown(records);
            if (!bench_md.empty())
                write_out(bench_md, md);
            else
                std::cerr << md;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
