#ifndef GCSYM_GRAPH_HPP
#define GCSYM_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gcsym {

// Undirected simple graph with 1-based external vertex indices (DIMACS
// convention). Immutable once built; adjacency lists are kept sorted.
class Graph {
  public:
    explicit Graph(int num_vertices = 0);

    // Adds an undirected edge; duplicates and reversed duplicates are
    // ignored. Self-loops throw.
    void add_edge(int u, int v);
    void finalize();  // sorts adjacency and the edge list

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;   // u < v, sorted
    std::vector<std::vector<int>> adjacency_;  // 0-based slots, 1-based ids
};

// DIMACS .col reader. Accepts comment lines, a single "p edge n m" line and
// "e u v" lines. A header/edge-count mismatch is tolerated with a warning
// to stderr; structural errors throw std::runtime_error.
Graph parse_dimacs_col(std::istream& in);
Graph parse_dimacs_col(const std::string& text);
Graph load_dimacs_col(const std::string& path);

// Canonical serialization (sorted edge list); parse(serialize(g)) == g.
std::string to_dimacs_col(const Graph& g, const std::string& comment = "");

// Exhaustive chromatic number with canonical color-introduction pruning.
// Intended as a test oracle; throws if the graph exceeds max_vertices.
int brute_force_chromatic(const Graph& g, int max_vertices = 10);

// Exhaustive max-clique size, same scale limits as the chromatic oracle.
int brute_force_max_clique(const Graph& g, int max_vertices = 10);

// Constructive benchmark families.
Graph mycielskian(const Graph& g);
Graph myciel_graph(int level);        // level 3 -> 11 vertices / 20 edges
Graph queen_graph(int rows, int cols);
Graph cycle_graph(int n);
Graph complete_graph(int n);

}  // namespace gcsym

#endif
