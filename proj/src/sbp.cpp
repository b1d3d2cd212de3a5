#include "gcsym/sbp.hpp"

#include <sstream>
#include <stdexcept>

namespace gcsym {

std::string SbpConfig::to_string() const {
    std::string s;
    auto add = [&s](const char* name) {
        if (!s.empty()) s += ",";
        s += name;
    };
    if (nu) add("nu");
    if (ca) add("ca");
    if (li) add("li");
    if (sc) add("sc");
    return s.empty() ? "none" : s;
}

SbpConfig SbpConfig::parse(const std::string& flags) {
    SbpConfig cfg;
    if (flags.empty() || flags == "none") return cfg;
    std::istringstream in(flags);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "nu") cfg.nu = true;
        else if (item == "ca") cfg.ca = true;
        else if (item == "li") cfg.li = true;
        else if (item == "sc") cfg.sc = true;
        else throw std::runtime_error("unknown SBP flag '" + item + "'");
    }
    return cfg;
}

std::vector<SbpConfig> SbpConfig::experiment_rows() {
    return {
        {},
        {.nu = true},
        {.ca = true},
        {.li = true},
        {.sc = true},
        {.nu = true, .sc = true},
    };
}

namespace {

void require_usage_vars(const Formula& f, const EncodingLayout& L) {
    if (f.num_vars < L.y(L.K) || L.K < 1 ||
        f.roles[L.y(1) - 1].kind != VarKind::ColorUsage)
        throw std::runtime_error("formula has no color-usage variables; SBP needs the base encoding");
}

}  // namespace

void add_nu(Formula& f, const EncodingLayout& L) {
    require_usage_vars(f, L);
    for (int k = 1; k < L.K; ++k)
        f.add_clause({Lit::neg(L.y(k + 1)), Lit::pos(L.y(k))});
}

void add_ca(Formula& f, const Graph& g, const EncodingLayout& L) {
    require_usage_vars(f, L);
    (void)g;
    for (int k = 1; k < L.K; ++k) {
        std::vector<PbTerm> terms;
        for (int i = 1; i <= L.n; ++i) {
            terms.push_back({1, Lit::pos(L.x(i, k))});
            terms.push_back({-1, Lit::pos(L.x(i, k + 1))});
        }
        f.add_pb(normalize_pb(std::move(terms), RawRel::GreaterEq, 0));
    }
}

void add_li(Formula& f, const Graph& g, const EncodingLayout& L) {
    require_usage_vars(f, L);
    (void)g;
    const int n = L.n, K = L.K;
    // V(i,k): vertex i is the lowest-index vertex colored k
    std::vector<std::vector<int>> V(n + 1, std::vector<int>(K + 1));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= K; ++k) V[i][k] = f.new_var({VarKind::LowestIndex, i, k});

    for (int k = 1; k <= K; ++k) {
        for (int i = 1; i <= n; ++i) {
            // uniqueness: V(i,k) -> ~V(j,k) for j < i
            for (int j = 1; j < i; ++j)
                f.add_clause({Lit::neg(V[i][k]), Lit::neg(V[j][k])});
            // link: V(i,k) -> x(i,k), V(i,k) -> ~x(j,k) for j < i
            f.add_clause({Lit::neg(V[i][k]), Lit::pos(L.x(i, k))});
            for (int j = 1; j < i; ++j)
                f.add_clause({Lit::neg(V[i][k]), Lit::neg(L.x(j, k))});
            // witness: (y(k) & x(i,k) & all-lower-x false) -> V(i,k)
            Clause w{Lit::neg(L.y(k)), Lit::neg(L.x(i, k))};
            for (int j = 1; j < i; ++j) w.push_back(Lit::pos(L.x(j, k)));
            w.push_back(Lit::pos(V[i][k]));
            f.add_clause(std::move(w));
        }
        // existence: y(k) -> some V(i,k)
        Clause e{Lit::neg(L.y(k))};
        for (int i = 1; i <= n; ++i) e.push_back(Lit::pos(V[i][k]));
        f.add_clause(std::move(e));
        // ordering: V(i,k) -> V(j,k-1) for some j > i; nothing for k = 1
        if (k >= 2) {
            for (int i = 1; i <= n; ++i) {
                Clause o{Lit::neg(V[i][k])};
                for (int j = i + 1; j <= n; ++j) o.push_back(Lit::pos(V[j][k - 1]));
                f.add_clause(std::move(o));
            }
        }
    }
}

void add_sc(Formula& f, const Graph& g, const EncodingLayout& L) {
    if (L.n == 0) return;
    int vl = 1;
    for (int v = 2; v <= L.n; ++v)
        if (g.degree(v) > g.degree(vl)) vl = v;  // ties keep the lowest index
    f.add_clause({Lit::pos(L.x(vl, 1))});
    int vl2 = 0;
    for (int u : g.neighbors(vl))
        if (vl2 == 0 || g.degree(u) > g.degree(vl2)) vl2 = u;  // neighbors sorted by index
    if (vl2 != 0 && L.K >= 2) f.add_clause({Lit::pos(L.x(vl2, 2))});
}

void apply_sbp(Formula& f, const Graph& g, const EncodingLayout& L, const SbpConfig& cfg) {
    if (cfg.nu) add_nu(f, L);
    if (cfg.ca) add_ca(f, g, L);
    if (cfg.li) add_li(f, g, L);
    if (cfg.sc) add_sc(f, g, L);
    f.comments.push_back("sbp= " + cfg.to_string());
}

}  // namespace gcsym
