#ifndef GCSYM_HARNESS_HPP
#define GCSYM_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcsym/automorphism.hpp"
#include "gcsym/graph.hpp"
#include "gcsym/sbp.hpp"
#include "gcsym/solver.hpp"

namespace gcsym {

struct BenchRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    int K = 0;
    SbpConfig sbp;
    bool instance_dependent = false;
    long long num_vars = 0;
    long long num_clauses = 0;
    long long num_pb = 0;
    int num_generators = 0;
    BigInt group_order = 1;
    bool sym_capped = false;
    double detect_time_s = 0.0;
    std::string solve_status;  // OPTIMAL/SAT/UNSAT/TIMEOUT/ERROR
    std::optional<int> best_value;
    double solve_time_s = 0.0;
    std::string error;
};

enum class InstDep { No, Yes, Both };

InstDep parse_inst_dep(const std::string& s);  // "no" | "yes" | "both"

struct GridOptions {
    int K = 20;  // <= 0 selects choose_k(g, 20) per instance
    InstDep inst_dep = InstDep::No;
    double solve_timeout_s = 1000.0;
    unsigned seed = 0;
    bool learning = true;
    SymmetryOptions sym;
    std::string csv_path;            // append records here as they finish
    std::string keep_encodings_dir;  // dump the solved OPB per grid cell
};

// Named instance source: either a .col file on disk or an in-memory graph
// (the constructive families), so the grid can mix both.
struct InstanceSpec {
    std::string name;
    std::string path;  // empty when graph is provided directly
    std::optional<Graph> graph;
};

InstanceSpec instance_from_path(const std::string& path);

// Recognizes the constructive families by name: "mycielN" and "queenR_C".
std::optional<Graph> builtin_graph(const std::string& name);

// Treats `s` as a builtin family name first, then as a .col path.
InstanceSpec resolve_instance(const std::string& s);

// One record per (instance, config, inst-dep flag). Pipeline per cell:
// load -> encode_opt -> instance-independent SBPs -> symmetry detection ->
// optional lex-leader SBPs -> minimize. Failures become ERROR rows and the
// grid keeps going.
std::vector<BenchRecord> run_grid(const std::vector<InstanceSpec>& instances,
                                  const std::vector<SbpConfig>& configs,
                                  const GridOptions& opts = {});

BenchRecord run_cell(const InstanceSpec& inst, const SbpConfig& cfg,
                     bool inst_dep, const GridOptions& opts);

std::string csv_header();
std::string csv_row(const BenchRecord& r);
std::string records_to_csv(const std::vector<BenchRecord>& records);

// Per-(config, inst-dep) aggregation: instances solved, summed solve time,
// summed group order.
std::string records_to_markdown(const std::vector<BenchRecord>& records);

}  // namespace gcsym

#endif
