#include "gcsym/dsatur.hpp"

#include <algorithm>
#include <set>

namespace gcsym {

std::vector<int> dsatur_coloring(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> color(n, 0);
    std::vector<std::set<int>> neighbor_colors(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            if (pick == -1) { pick = v; continue; }
            size_t sv = neighbor_colors[v].size(), sp = neighbor_colors[pick].size();
            size_t dv = g.neighbors(v + 1).size(), dp = g.neighbors(pick + 1).size();
            if (sv > sp || (sv == sp && dv > dp)) pick = v;
        }
        int c = 1;
        while (neighbor_colors[pick].count(c)) ++c;
        color[pick] = c;
        for (int w : g.neighbors(pick + 1)) neighbor_colors[w - 1].insert(c);
    }
    return color;
}

int dsatur_color_count(const Graph& g) {
    auto col = dsatur_coloring(g);
    return col.empty() ? 0 : *std::max_element(col.begin(), col.end());
}

int choose_k(const Graph& g, int cap) {
    return std::max(1, std::min(dsatur_color_count(g), cap));
}

}  // namespace gcsym
