#include "gcsym/perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gcsym {

bool LitPerm::is_identity() const {
    for (int i = 0; i < domain(); ++i)
        if (image[i] != i) return false;
    return true;
}

bool LitPerm::boolean_consistent() const {
    for (int i = 0; i < domain(); ++i)
        if (image[i ^ 1] != (image[i] ^ 1)) return false;
    return true;
}

std::vector<int> LitPerm::support_vars() const {
    std::vector<int> out;
    for (int v = 0; 2 * v < domain(); ++v)
        if (image[2 * v] != 2 * v) out.push_back(v + 1);
    return out;
}

LitPerm LitPerm::identity(int num_vars) {
    LitPerm p;
    p.image.resize(2 * num_vars);
    for (int i = 0; i < 2 * num_vars; ++i) p.image[i] = i;
    return p;
}

LitPerm LitPerm::compose(const LitPerm& then) const {
    LitPerm out;
    out.image.resize(domain());
    for (int i = 0; i < domain(); ++i) out.image[i] = then.image[image[i]];
    return out;
}

LitPerm LitPerm::inverse() const {
    LitPerm out;
    out.image.resize(domain());
    for (int i = 0; i < domain(); ++i) out.image[image[i]] = i;
    return out;
}

std::string LitPerm::to_cycles() const {
    auto name = [](int code) {
        std::string s = (code & 1) ? "~x" : "x";
        return s + std::to_string(code / 2 + 1);
    };
    std::ostringstream out;
    std::vector<bool> done(domain(), false);
    for (int i = 0; i < domain(); ++i) {
        if (done[i] || image[i] == i) continue;
        // collect the cycle through i
        std::vector<int> cyc;
        int j = i;
        do {
            cyc.push_back(j);
            done[j] = true;
            j = image[j];
        } while (j != i);
        // skip if this is the complement image of an already-printed cycle
        bool complement_done = done[i ^ 1] && std::find(cyc.begin(), cyc.end(), i ^ 1) == cyc.end();
        if (complement_done) continue;
        out << "(";
        for (size_t k = 0; k < cyc.size(); ++k) out << (k ? " " : "") << name(cyc[k]);
        out << ")";
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

bool is_formula_automorphism(const Formula& f, const LitPerm& p) {
    if (p.domain() != 2 * f.num_vars || !p.boolean_consistent()) return false;
    auto map_clause = [&p](const Clause& c) {
        Clause out;
        out.reserve(c.size());
        for (Lit l : c) out.push_back(p.map(l));
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<Clause> orig = f.clauses, mapped;
    mapped.reserve(orig.size());
    for (const auto& c : orig) mapped.push_back(map_clause(c));
    for (auto& c : orig) std::sort(c.begin(), c.end());
    std::sort(orig.begin(), orig.end());
    std::sort(mapped.begin(), mapped.end());
    if (orig != mapped) return false;

    using PbKey = std::tuple<std::vector<std::pair<int, int>>, int, int>;  // (coef,lit), rel, bound
    auto pb_key = [](const PbConstraint& c, const LitPerm* perm) {
        std::vector<std::pair<int, int>> terms;
        for (const auto& t : c.terms)
            terms.emplace_back(t.coef, perm ? perm->image[t.lit.code] : t.lit.code);
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        return PbKey{terms, static_cast<int>(c.rel), c.bound};
    };
    std::vector<PbKey> po, pm;
    for (const auto& c : f.pb) {
        po.push_back(pb_key(c, nullptr));
        pm.push_back(pb_key(c, &p));
    }
    std::sort(po.begin(), po.end());
    std::sort(pm.begin(), pm.end());
    if (po != pm) return false;

    std::vector<std::pair<int, int>> oo, om;
    for (const auto& t : f.objective) {
        oo.emplace_back(t.coef, t.lit.code);
        om.emplace_back(t.coef, p.image[t.lit.code]);
    }
    std::sort(oo.begin(), oo.end());
    std::sort(om.begin(), om.end());
    return oo == om;
}

// ---- Schreier-Sims ----

namespace {

using Perm = std::vector<int>;

Perm p_compose(const Perm& a, const Perm& b) {  // apply a, then b
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

Perm p_inverse(const Perm& a) {
    Perm out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
    return out;
}

bool p_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

struct StabChain {
    int n = 0;
    std::vector<int> base;
    std::vector<Perm> sgens;   // strong generators
    std::vector<int> glevel;   // sgens[i] fixes base[0..glevel[i]-1]
    std::vector<std::unordered_map<int, Perm>> transversal;  // point -> perm with base[i] -> point
    std::vector<std::set<std::pair<int, size_t>>> processed;  // (point, gen idx) Schreier pairs done

    // Sift; returns level where the residue stops, residue itself in g.
    size_t sift(Perm& g) const {
        for (size_t i = 0; i < base.size(); ++i) {
            int p = g[base[i]];
            auto it = transversal[i].find(p);
            if (it == transversal[i].end()) return i;
            g = p_compose(g, p_inverse(it->second));
            if (p_identity(g)) return i;  // absorbed
        }
        return base.size();
    }

    void add(Perm g0) {
        std::vector<Perm> queue{std::move(g0)};
        while (!queue.empty()) {
            Perm g = std::move(queue.back());
            queue.pop_back();
            if (p_identity(g)) continue;
            size_t lvl = sift(g);
            if (p_identity(g)) continue;
            if (lvl == base.size()) {
                int pt = -1;
                for (int i = 0; i < n; ++i)
                    if (g[i] != i) { pt = i; break; }
                base.push_back(pt);
                transversal.push_back({});
                processed.push_back({});
                Perm id(n);
                for (int i = 0; i < n; ++i) id[i] = i;
                transversal.back()[pt] = std::move(id);
            }
            sgens.push_back(std::move(g));
            glevel.push_back(static_cast<int>(lvl));
            // The new generator lives in every stabilizer down to its sift
            // level, so all those orbits may grow.
            for (size_t j = 0; j <= lvl; ++j) close_orbit(j, queue);
        }
    }

    void close_orbit(size_t lvl, std::vector<Perm>& queue) {
        // BFS closure of the orbit; emit unprocessed Schreier generators.
        std::vector<int> frontier;
        for (const auto& [pt, t] : transversal[lvl]) frontier.push_back(pt);
        for (size_t fi = 0; fi < frontier.size(); ++fi) {
            int q = frontier[fi];
            for (size_t gi = 0; gi < sgens.size(); ++gi) {
                if (glevel[gi] < static_cast<int>(lvl)) continue;
                const Perm& g = sgens[gi];
                int r = g[q];
                if (!transversal[lvl].count(r)) {
                    transversal[lvl][r] = p_compose(transversal[lvl][q], g);
                    frontier.push_back(r);
                }
                if (processed[lvl].insert({q, gi}).second) {
                    Perm s = p_compose(p_compose(transversal[lvl][q], g),
                                       p_inverse(transversal[lvl][r]));
                    if (!p_identity(s)) queue.push_back(std::move(s));
                }
            }
        }
    }
};

}  // namespace

BigInt group_order(const std::vector<LitPerm>& gens) {
    if (gens.empty()) return 1;
    StabChain chain;
    chain.n = gens[0].domain();
    for (const auto& g : gens) {
        if (g.domain() != chain.n) throw std::runtime_error("generators over different domains");
        chain.add(g.image);
    }
    BigInt order = 1;
    for (const auto& t : chain.transversal) order *= static_cast<long long>(t.size());
    return order;
}

}  // namespace gcsym
