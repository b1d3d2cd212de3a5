#ifndef GCSYM_AUTOMORPHISM_HPP
#define GCSYM_AUTOMORPHISM_HPP

#include <string>
#include <vector>

#include "gcsym/colored_graph.hpp"
#include "gcsym/formula.hpp"
#include "gcsym/perm.hpp"

namespace gcsym {

using PermGenerator = LitPerm;

struct SymmetryOptions {
    long long node_budget = 200000;
    double time_limit_s = 0.0;  // 0 = no time cap
};

struct SymmetryResult {
    std::vector<PermGenerator> generators;
    bool capped = false;  // budget hit; generators still sound, maybe incomplete
    long long search_nodes = 0;
    std::vector<std::string> warnings;
};

// Individualization-refinement search over the colored graph. Returned
// generators are projected to literal permutations and verified as syntactic
// automorphisms of `f` before being reported; anything that fails the check
// (possible only via spurious graph symmetries) is dropped with a warning.
SymmetryResult find_generators(const ColoredGraph& cg, const Formula& f,
                               SymmetryOptions opts = {});

struct GroupSummary {
    int num_generators = 0;
    BigInt order = 1;
    double detection_time_s = 0.0;
    bool capped = false;
    bool circular_chain_warning = false;
};

struct SymmetryDetection {
    SymmetryResult result;
    GroupSummary summary;
};

// Convenience wrapper: build the graph, run the search, compute the order.
SymmetryDetection detect_symmetries(const Formula& f, SymmetryOptions opts = {});

}  // namespace gcsym

#endif
