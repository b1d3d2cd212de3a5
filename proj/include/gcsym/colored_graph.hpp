#ifndef GCSYM_COLORED_GRAPH_HPP
#define GCSYM_COLORED_GRAPH_HPP

#include <utility>
#include <vector>

#include "gcsym/formula.hpp"

namespace gcsym {

// Automorphism-detection graph for a Formula. Two literal nodes per
// variable share one color class and are joined by a consistency edge (so
// phase-shift symmetries remain detectable); binary clauses become plain
// literal-literal edges; larger (and unit) clauses get a clause-colored
// node; each PB row gets a node colored by its shape signature; the
// objective gets a node of its own color.
struct ColoredGraph {
    enum class NodeKind { Literal, ClauseNode, PbNode, ObjectiveNode };
    struct Node {
        NodeKind kind;
        int ref;  // literal code / clause index / pb index / unused
    };

    int num_vars = 0;
    std::vector<Node> nodes;
    std::vector<int> node_color;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int literal_node(int lit_code) const { return lit_code; }
};

struct ColoredGraphBuild {
    ColoredGraph graph;
    // Spurious symmetries are possible only when the binary-implication
    // structure contains a directed cycle; callers should treat detected
    // symmetries as unverified in that case (they are still checked against
    // the formula before being reported).
    bool has_circular_chain = false;
};

ColoredGraphBuild build_colored_graph(const Formula& f);

// Standalone detector for the binary-clause implication cycles.
bool has_circular_implication_chain(const Formula& f);

}  // namespace gcsym

#endif
