#ifndef GCSYM_DSATUR_HPP
#define GCSYM_DSATUR_HPP

#include <vector>

#include "gcsym/graph.hpp"

namespace gcsym {

// DSATUR greedy coloring: repeatedly color the vertex with the most distinct
// neighbor colors (ties: higher degree, then lower index) with the smallest
// feasible color. Returns 1-based colors indexed by vertex-1.
std::vector<int> dsatur_coloring(const Graph& g);

int dsatur_color_count(const Graph& g);

// Upper bound for the encoding: min(DSATUR color count, cap), at least 1.
int choose_k(const Graph& g, int cap);

}  // namespace gcsym

#endif
