#include "gcsym/harness.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gcsym/dsatur.hpp"
#include "gcsym/encoder.hpp"
#include "gcsym/lex_leader.hpp"
#include "gcsym/opb.hpp"

namespace gcsym {

InstDep parse_inst_dep(const std::string& s) {
    if (s == "no") return InstDep::No;
    if (s == "yes") return InstDep::Yes;
    if (s == "both") return InstDep::Both;
    throw std::runtime_error("bad --inst-dep value '" + s + "' (no|yes|both)");
}

InstanceSpec instance_from_path(const std::string& path) {
    InstanceSpec spec;
    spec.path = path;
    std::string base = std::filesystem::path(path).filename().string();
    if (base.size() > 4 && base.substr(base.size() - 4) == ".col")
        base.resize(base.size() - 4);
    spec.name = base;
    return spec;
}

std::optional<Graph> builtin_graph(const std::string& name) {
    try {
        if (name.rfind("myciel", 0) == 0) {
            int level = std::stoi(name.substr(6));
            if (level >= 2 && level <= 12) return myciel_graph(level);
        }
        if (name.rfind("queen", 0) == 0) {
            auto sep = name.find('_', 5);
            if (sep != std::string::npos) {
                int r = std::stoi(name.substr(5, sep - 5));
                int c = std::stoi(name.substr(sep + 1));
                if (r >= 1 && c >= 1 && r * c <= 400) return queen_graph(r, c);
            }
        }
    } catch (const std::exception&) {
        // fall through: not a builtin name
    }
    return std::nullopt;
}

InstanceSpec resolve_instance(const std::string& s) {
    if (auto g = builtin_graph(s)) {
        InstanceSpec spec;
        spec.name = s;
        spec.graph = std::move(g);
        return spec;
    }
    return instance_from_path(s);
}

namespace {

Graph load_instance(const InstanceSpec& inst) {
    if (inst.graph) return *inst.graph;
    return load_dimacs_col(inst.path);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

BenchRecord run_cell(const InstanceSpec& inst, const SbpConfig& cfg,
                     bool inst_dep, const GridOptions& opts) {
    BenchRecord rec;
    rec.instance = inst.name;
    rec.sbp = cfg;
    rec.instance_dependent = inst_dep;
    try {
        Graph g = load_instance(inst);
        rec.n = g.num_vertices();
        rec.m = g.num_edges();
        rec.K = opts.K > 0 ? opts.K : choose_k(g, 20);

        Formula f = encode_opt(g, rec.K);
        EncodingLayout L = layout_of(g, rec.K);
        apply_sbp(f, g, L, cfg);

        SymmetryDetection det = detect_symmetries(f, opts.sym);
        rec.num_generators = det.summary.num_generators;
        rec.group_order = det.summary.order;
        rec.sym_capped = det.summary.capped;
        rec.detect_time_s = det.summary.detection_time_s;
        if (inst_dep) add_lex_leader(f, det.result.generators);

        rec.num_vars = f.num_vars;
        rec.num_clauses = static_cast<long long>(f.clauses.size());
        rec.num_pb = static_cast<long long>(f.pb.size());

        if (!opts.keep_encodings_dir.empty()) {
            std::filesystem::create_directories(opts.keep_encodings_dir);
            std::string tag = cfg.any() ? cfg.to_string() : "none";
            std::replace(tag.begin(), tag.end(), ',', '+');
            std::string fname = inst.name + "_k" + std::to_string(rec.K) + "_" + tag +
                                (inst_dep ? "_dep" : "") + ".opb";
            std::ofstream out(std::filesystem::path(opts.keep_encodings_dir) / fname);
            out << emit_opb(f);
        }

        SolverOptions sopts;
        sopts.time_limit_s = opts.solve_timeout_s;
        sopts.seed = opts.seed;
        sopts.learning = opts.learning;
        SolveResult res = minimize(f, sopts);
        rec.solve_status = to_string(res.status);
        rec.best_value = res.best_value;
        rec.solve_time_s = res.stats.elapsed_s;
    } catch (const std::exception& e) {
        rec.solve_status = "ERROR";
        rec.error = e.what();
    }
    return rec;
}

std::vector<BenchRecord> run_grid(const std::vector<InstanceSpec>& instances,
                                  const std::vector<SbpConfig>& configs,
                                  const GridOptions& opts) {
    std::vector<bool> dep_flags;
    if (opts.inst_dep == InstDep::No || opts.inst_dep == InstDep::Both)
        dep_flags.push_back(false);
    if (opts.inst_dep == InstDep::Yes || opts.inst_dep == InstDep::Both)
        dep_flags.push_back(true);

    std::ofstream csv;
    if (!opts.csv_path.empty()) {
        bool fresh = !std::filesystem::exists(opts.csv_path) ||
                     std::filesystem::file_size(opts.csv_path) == 0;
        csv.open(opts.csv_path, std::ios::app);
        if (!csv) throw std::runtime_error("cannot open " + opts.csv_path);
        if (fresh) csv << csv_header() << '\n' << std::flush;
    }

    std::vector<BenchRecord> records;
    for (const auto& inst : instances)
        for (const auto& cfg : configs)
            for (bool dep : dep_flags) {
                BenchRecord rec = run_cell(inst, cfg, dep, opts);
                if (csv.is_open()) csv << csv_row(rec) << '\n' << std::flush;
                records.push_back(std::move(rec));
            }
    return records;
}

std::string csv_header() {
    return "instance,n,m,K,sbp,inst_dep,num_vars,num_clauses,num_pb,"
           "num_generators,group_order,sym_capped,detect_time_s,solve_status,"
           "best_value,solve_time_s,error";
}

std::string csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << csv_escape(r.instance) << ',' << r.n << ',' << r.m << ',' << r.K << ','
        << csv_escape(r.sbp.any() ? r.sbp.to_string() : "none") << ','
        << (r.instance_dependent ? "yes" : "no") << ',' << r.num_vars << ','
        << r.num_clauses << ',' << r.num_pb << ',' << r.num_generators << ','
        << r.group_order.str() << ',' << (r.sym_capped ? 1 : 0) << ','
        << r.detect_time_s << ',' << r.solve_status << ',';
    if (r.best_value) out << *r.best_value;
    out << ',' << r.solve_time_s << ',' << csv_escape(r.error);
    return out.str();
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& r : records) out << csv_row(r) << '\n';
    return out.str();
}

std::string records_to_markdown(const std::vector<BenchRecord>& records) {
    struct Agg {
        int total = 0, solved = 0, errors = 0;
        double solve_time = 0.0, detect_time = 0.0;
        BigInt order_sum = 0;
    };
    std::map<std::pair<std::string, bool>, Agg> agg;
    for (const auto& r : records) {
        Agg& a = agg[{r.sbp.any() ? r.sbp.to_string() : "none", r.instance_dependent}];
        ++a.total;
        if (r.solve_status == "OPTIMAL") ++a.solved;
        if (r.solve_status == "ERROR") ++a.errors;
        a.solve_time += r.solve_time_s;
        a.detect_time += r.detect_time_s;
        a.order_sum += r.group_order;
    }
    std::ostringstream out;
    out << "| config | inst-dep | instances | solved | errors | sum group order | "
           "detect time (s) | solve time (s) |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& [key, a] : agg) {
        out << "| " << key.first << " | " << (key.second ? "yes" : "no") << " | "
            << a.total << " | " << a.solved << " | " << a.errors << " | "
            << a.order_sum.str() << " | " << a.detect_time << " | " << a.solve_time
            << " |\n";
    }
    return out.str();
}

}  // namespace gcsym
