#include "gcsym/automorphism.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <numeric>
#include <utility>

namespace gcsym {

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const ColoredGraph& g;
    const Formula& f;
    SymmetryOptions opts;
    int n;

    long long nodes = 0;
    bool capped = false;
    Clock::time_point deadline{};
    bool has_deadline = false;

    bool have_first = false;
    std::vector<int> first_seq;                 // color position -> node at first leaf
    std::vector<std::vector<int>> first_shape;  // per level, cell size by color
    std::vector<int> first_choice;              // per level, branch node on first path

    std::vector<int> uf;  // node orbits under accepted generators
    int backjump_to = -1;

    std::vector<LitPerm> generators;
    std::vector<std::string> warnings;

    Searcher(const ColoredGraph& g_, const Formula& f_, SymmetryOptions o)
        : g(g_), f(f_), opts(o), n(static_cast<int>(g_.nodes.size())) {
        uf.resize(n);
        std::iota(uf.begin(), uf.end(), 0);
        if (opts.time_limit_s > 0) {
            has_deadline = true;
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(opts.time_limit_s));
        }
    }

    int find(int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[b] = a;
    }

    bool out_of_budget() {
        if (capped) return true;
        if (nodes > opts.node_budget) { capped = true; return true; }
        if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline) {
            capped = true;
            return true;
        }
        return false;
    }

    // Equitable refinement with canonical color ids: each pass re-ranks nodes
    // by (current color, sorted multiset of neighbor colors) and stops once
    // the number of classes is stable. Canonical ids make partition shapes
    // comparable across branches.
    int refine(std::vector<int>& col) const {
        int ncol = 1 + *std::max_element(col.begin(), col.end());
        for (;;) {
            std::vector<std::pair<std::pair<int, std::vector<int>>, int>> inv;
            inv.reserve(n);
            for (int u = 0; u < n; ++u) {
                std::vector<int> nb;
                nb.reserve(g.adj[u].size());
                for (int w : g.adj[u]) nb.push_back(col[w]);
                std::sort(nb.begin(), nb.end());
                inv.push_back({{col[u], std::move(nb)}, u});
            }
            std::sort(inv.begin(), inv.end());
            int nc = 0;
            std::vector<int> fresh(n);
            for (int i = 0; i < n; ++i) {
                if (i && inv[i].first != inv[i - 1].first) ++nc;
                fresh[inv[i].second] = nc;
            }
            ++nc;
            bool grew = nc > ncol;
            col = std::move(fresh);
            ncol = nc;
            if (!grew) break;
        }
        return ncol;
    }

    bool is_graph_automorphism(const std::vector<int>& p) const {
        std::vector<int> buf;
        for (int u = 0; u < n; ++u) {
            if (g.node_color[u] != g.node_color[p[u]]) return false;
            buf.clear();
            for (int w : g.adj[u]) buf.push_back(p[w]);
            std::sort(buf.begin(), buf.end());
            if (buf != g.adj[p[u]]) return false;
        }
        return true;
    }

    void accept(const std::vector<int>& p, int dev) {
        // Project to a literal permutation; the 2*num_vars literal nodes come
        // first and share a color, so images stay inside the literal block.
        int lits = 2 * f.num_vars;
        LitPerm lp;
        lp.image.assign(p.begin(), p.begin() + lits);
        for (int c : lp.image)
            if (c >= lits) {
                warnings.push_back("discarded generator mapping a literal to a non-literal node");
                return;
            }
        bool identity_proj = lp.is_identity();
        if (!identity_proj &&
            (!lp.boolean_consistent() || !is_formula_automorphism(f, lp))) {
            warnings.push_back("discarded spurious graph symmetry " + lp.to_cycles());
            return;
        }
        if (!identity_proj) generators.push_back(std::move(lp));
        for (int u = 0; u < n; ++u) unite(u, p[u]);
        backjump_to = dev;
    }

    void leaf(const std::vector<int>& col, int dev) {
        std::vector<int> seq(n);
        for (int u = 0; u < n; ++u) seq[col[u]] = u;
        if (!have_first) {
            have_first = true;
            first_seq = std::move(seq);
            return;
        }
        std::vector<int> p(n);
        bool ident = true;
        for (int i = 0; i < n; ++i) {
            p[first_seq[i]] = seq[i];
            if (first_seq[i] != seq[i]) ident = false;
        }
        if (ident || !is_graph_automorphism(p)) return;
        accept(p, dev);
    }

    void search(const std::vector<int>& col, int ncol, int level, bool on_first, int dev) {
        ++nodes;
        if (out_of_budget()) return;

        std::vector<int> shape(ncol, 0);
        for (int u = 0; u < n; ++u) ++shape[col[u]];
        if (!have_first) {
            first_shape.push_back(shape);
        } else if (level >= static_cast<int>(first_shape.size()) ||
                   shape != first_shape[level]) {
            return;  // partition shape deviates from the first path: dead end
        }

        if (ncol == n) {
            leaf(col, dev);
            return;
        }

        int target = -1, best = INT_MAX;
        for (int c = 0; c < ncol; ++c)
            if (shape[c] > 1 && shape[c] < best) { best = shape[c]; target = c; }
        std::vector<int> cell;
        cell.reserve(best);
        for (int u = 0; u < n; ++u)
            if (col[u] == target) cell.push_back(u);

        if (on_first && !have_first) first_choice.push_back(cell[0]);
        int fc = on_first ? first_choice[level] : -1;

        std::vector<int> tried;
        for (int v : cell) {
            if (capped) return;
            bool child_first = on_first && v == fc;
            if (on_first && !child_first) {
                // Orbit pruning on the first path: siblings already covered by
                // a known symmetry need not be explored.
                bool seen = false;
                for (int w : tried)
                    if (find(w) == find(v)) { seen = true; break; }
                if (seen) continue;
            }
            tried.push_back(v);

            std::vector<int> col2 = col;
            col2[v] = ncol;  // individualize with a fresh color
            int ncol2 = refine(col2);
            search(col2, ncol2, level + 1, child_first,
                   child_first ? dev : (dev == -1 ? level : dev));

            if (backjump_to != -1) {
                if (backjump_to < level) return;
                backjump_to = -1;  // resume here with the enlarged orbits
            }
        }
    }
};

}  // namespace

SymmetryResult find_generators(const ColoredGraph& cg, const Formula& f,
                               SymmetryOptions opts) {
    SymmetryResult out;
    if (cg.nodes.empty()) return out;
    Searcher s(cg, f, opts);
    std::vector<int> col = cg.node_color;
    int ncol = s.refine(col);
    s.search(col, ncol, 0, true, -1);
    out.generators = std::move(s.generators);
    out.capped = s.capped;
    out.search_nodes = s.nodes;
    out.warnings = std::move(s.warnings);
    return out;
}

SymmetryDetection detect_symmetries(const Formula& f, SymmetryOptions opts) {
    auto t0 = Clock::now();
    ColoredGraphBuild build = build_colored_graph(f);
    SymmetryDetection out;
    out.result = find_generators(build.graph, f, opts);
    out.summary.num_generators = static_cast<int>(out.result.generators.size());
    out.summary.order = group_order(out.result.generators);
    out.summary.capped = out.result.capped;
    out.summary.circular_chain_warning = build.has_circular_chain;
    out.summary.detection_time_s =
        std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

}  // namespace gcsym
