#include "gcsym/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace gcsym {

namespace {

void add_edge(ColoredGraph& g, int a, int b) { g.edges.emplace_back(a, b); }

}  // namespace

bool has_circular_implication_chain(const Formula& f) {
    // Directed graph on literal codes: clause (a v b) gives ~a -> b, ~b -> a.
    int n = 2 * f.num_vars;
    std::vector<std::vector<int>> succ(n);
    bool any = false;
    for (const auto& c : f.clauses) {
        if (c.size() != 2) continue;
        succ[(~c[0]).code].push_back(c[1].code);
        succ[(~c[1]).code].push_back(c[0].code);
        any = true;
    }
    if (!any) return false;
    // Iterative DFS cycle check (color: 0 white, 1 on stack, 2 done).
    std::vector<int8_t> state(n, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        stack.emplace_back(s, 0);
        state[s] = 1;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < succ[u].size()) {
                int v = succ[u][idx++];
                if (state[v] == 1) return true;
                if (state[v] == 0) {
                    state[v] = 1;
                    stack.emplace_back(v, 0);
                }
            } else {
                state[u] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

ColoredGraphBuild build_colored_graph(const Formula& f) {
    ColoredGraphBuild out;
    ColoredGraph& g = out.graph;
    g.num_vars = f.num_vars;

    // Literal nodes first: node 2(v-1) is x_v, node 2(v-1)+1 is ~x_v. All
    // literal nodes share color 0; the complement edge keeps phases paired.
    for (int v = 1; v <= f.num_vars; ++v) {
        g.nodes.push_back({ColoredGraph::NodeKind::Literal, 2 * (v - 1)});
        g.nodes.push_back({ColoredGraph::NodeKind::Literal, 2 * (v - 1) + 1});
        g.node_color.push_back(0);
        g.node_color.push_back(0);
        add_edge(g, 2 * (v - 1), 2 * (v - 1) + 1);
    }

    // Binary clauses collapse to a literal-literal edge; everything else
    // (including units) gets a clause node. One shared color for all clause
    // nodes is enough: degree separates them during refinement.
    const int clause_color = 1;
    int next_color = 2;
    for (size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const Clause& c = f.clauses[ci];
        if (c.size() == 2) {
            add_edge(g, g.literal_node(c[0].code), g.literal_node(c[1].code));
            continue;
        }
        int node = static_cast<int>(g.nodes.size());
        g.nodes.push_back({ColoredGraph::NodeKind::ClauseNode, static_cast<int>(ci)});
        g.node_color.push_back(clause_color);
        for (Lit l : c) add_edge(g, node, g.literal_node(l.code));
    }

    // PB nodes: rows are interchangeable only if they have the same shape,
    // so color by (sorted coefficient multiset, relation, bound).
    using PbSig = std::tuple<std::vector<int>, int, int>;
    std::map<PbSig, int> pb_color;
    for (size_t pi = 0; pi < f.pb.size(); ++pi) {
        const PbConstraint& c = f.pb[pi];
        std::vector<int> coefs;
        coefs.reserve(c.terms.size());
        for (const auto& t : c.terms) coefs.push_back(t.coef);
        std::sort(coefs.begin(), coefs.end());
        PbSig sig{std::move(coefs), static_cast<int>(c.rel), c.bound};
        auto [it, fresh] = pb_color.emplace(sig, next_color);
        if (fresh) ++next_color;
        int node = static_cast<int>(g.nodes.size());
        g.nodes.push_back({ColoredGraph::NodeKind::PbNode, static_cast<int>(pi)});
        g.node_color.push_back(it->second);
        for (const auto& t : c.terms) add_edge(g, node, g.literal_node(t.lit.code));
    }

    // Objective node with its own color; symmetric instances would still be
    // distinguished if coefficients differed, but ours are uniform, so a
    // plain edge to each objective literal suffices.
    if (f.has_objective()) {
        int node = static_cast<int>(g.nodes.size());
        g.nodes.push_back({ColoredGraph::NodeKind::ObjectiveNode, 0});
        g.node_color.push_back(next_color++);
        for (const auto& t : f.objective) {
            (void)t.coef;
            add_edge(g, node, g.literal_node(t.lit.code));
        }
    }

    g.adj.assign(g.nodes.size(), {});
    for (auto [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());

    out.has_circular_chain = has_circular_implication_chain(f);
    return out;
}

}  // namespace gcsym
