#include "gcsym/graph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gcsym {

Graph::Graph(int num_vertices) : n_(num_vertices), adjacency_(num_vertices) {
    if (num_vertices < 0) throw std::runtime_error("negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw std::runtime_error("edge endpoint out of range: " + std::to_string(u) + " " +
                                 std::to_string(v));
    if (u == v) throw std::runtime_error("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) return;
    edges_.emplace_back(u, v);
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
}

void Graph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 1 || v > n_) throw std::runtime_error("vertex index out of range");
    return adjacency_[v - 1];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw std::runtime_error("vertex index out of range");
    const auto& a = adjacency_[u - 1];
    return std::find(a.begin(), a.end(), v) != a.end();
}

Graph parse_dimacs_col(std::istream& in) {
    std::string line;
    bool saw_header = false;
    int n = 0, declared_m = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (saw_header) throw std::runtime_error("duplicate p line at line " + std::to_string(lineno));
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw std::runtime_error("malformed p line at line " + std::to_string(lineno));
            if (n < 0 || declared_m < 0)
                throw std::runtime_error("negative size in p line at line " + std::to_string(lineno));
            g = Graph(n);
            saw_header = true;
        } else if (tag == "e") {
            if (!saw_header) throw std::runtime_error("e line before p line at line " + std::to_string(lineno));
            int u, v;
            if (!(ls >> u >> v))
                throw std::runtime_error("malformed e line at line " + std::to_string(lineno));
            g.add_edge(u, v);
        } else if (tag == "n") {
            // vertex annotation lines in some published files; ignored
            continue;
        } else {
            throw std::runtime_error("unrecognized line tag '" + tag + "' at line " +
                                     std::to_string(lineno));
        }
    }
    if (!saw_header) throw std::runtime_error("missing p line");
    g.finalize();
    if (g.num_edges() != declared_m)
        std::cerr << "warning: header declares " << declared_m << " edges, file has "
                  << g.num_edges() << " after de-duplication\n";
    return g;
}

Graph parse_dimacs_col(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_col(in);
}

Graph load_dimacs_col(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_dimacs_col(in);
}

std::string to_dimacs_col(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

namespace {

bool extend_coloring(const Graph& g, std::vector<int>& color, int v, int max_color) {
    int n = g.num_vertices();
    if (v > n) return true;
    // Canonical order: vertex v may introduce at most one fresh color.
    int used_so_far = 0;
    for (int u = 1; u < v; ++u) used_so_far = std::max(used_so_far, color[u]);
    int limit = std::min(max_color, used_so_far + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && color[u] == c) { ok = false; break; }
        if (!ok) continue;
        color[v] = c;
        if (extend_coloring(g, color, v + 1, max_color)) return true;
        color[v] = 0;
    }
    return false;
}

}  // namespace

int brute_force_chromatic(const Graph& g, int max_vertices) {
    int n = g.num_vertices();
    if (n > max_vertices) throw std::runtime_error("graph too large for brute-force oracle");
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> color(n + 1, 0);
        if (extend_coloring(g, color, 1, k)) return k;
    }
    return n;  // unreachable for loop-free graphs
}

int brute_force_max_clique(const Graph& g, int max_vertices) {
    int n = g.num_vertices();
    if (n > max_vertices) throw std::runtime_error("graph too large for brute-force oracle");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool clique = true;
        for (int u = 1; clique && u <= n; ++u) {
            if (!(mask & (1u << (u - 1)))) continue;
            for (int v = u + 1; v <= n; ++v)
                if ((mask & (1u << (v - 1))) && !g.adjacent(u, v)) { clique = false; break; }
        }
        if (clique) best = size;
    }
    return best;
}

Graph mycielskian(const Graph& g) {
    int n = g.num_vertices();
    Graph out(2 * n + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    // shadow vertex n+i copies the neighborhood of i; apex 2n+1 joins shadows
    for (auto [u, v] : g.edges()) {
        out.add_edge(n + u, v);
        out.add_edge(n + v, u);
    }
    for (int i = 1; i <= n; ++i) out.add_edge(n + i, 2 * n + 1);
    out.finalize();
    return out;
}

Graph myciel_graph(int level) {
    if (level < 2) throw std::runtime_error("myciel level must be >= 2");
    Graph g = complete_graph(2);  // mycielskian(K2) is C5 = myciel2
    for (int i = 2; i <= level; ++i) g = mycielskian(g);
    return g;
}

Graph queen_graph(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r1 = 0; r1 < rows; ++r1)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int r2 = 0; r2 < rows; ++r2)
                for (int c2 = 0; c2 < cols; ++c2) {
                    if (id(r1, c1) >= id(r2, c2)) continue;
                    if (r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2)
                        g.add_edge(id(r1, c1), id(r2, c2));
                }
    g.finalize();
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    if (n > 2) g.add_edge(n, 1);
    g.finalize();
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    g.finalize();
    return g;
}

}  // namespace gcsym
