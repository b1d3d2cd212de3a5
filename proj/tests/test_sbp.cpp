#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcsym/encoder.hpp"
#include "gcsym/graph.hpp"
#include "gcsym/perm.hpp"
#include "gcsym/sbp.hpp"
#include "gcsym/solver.hpp"

using namespace gcsym;

namespace {

Graph figure1_graph() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.finalize();
    return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    g.finalize();
    return g;
}

// extends a permutation over the base variables with identity on new ones
LitPerm extend(const LitPerm& p, int num_vars) {
    LitPerm out = LitPerm::identity(num_vars);
    for (int i = 0; i < p.domain(); ++i) out.image[i] = p.image[i];
    return out;
}

LitPerm swap_vars(LitPerm p, int a, int b) {
    p.image[2 * (a - 1)] = 2 * (b - 1);
    p.image[2 * (a - 1) + 1] = 2 * (b - 1) + 1;
    p.image[2 * (b - 1)] = 2 * (a - 1);
    p.image[2 * (b - 1) + 1] = 2 * (a - 1) + 1;
    return p;
}

}  // namespace

TEST_CASE("config parsing") {
    CHECK(SbpConfig{}.to_string() == "none");
    SbpConfig c = SbpConfig::parse("nu,sc");
    CHECK(c.nu);
    CHECK(c.sc);
    CHECK(!c.ca);
    CHECK(c.to_string() == "nu,sc");
    CHECK(SbpConfig::parse("none") == SbpConfig{});
    CHECK(SbpConfig::experiment_rows().size() == 6u);
    CHECK_THROWS(SbpConfig::parse("bogus"));
}

TEST_CASE("NU adds K-1 binary clauses") {
    Graph g = myciel_graph(3);
    for (int K : {1, 4, 20}) {
        Formula f = encode_opt(g, K);
        size_t before = f.clauses.size();
        add_nu(f, layout_of(g, K));
        CHECK(f.clauses.size() - before == static_cast<size_t>(K - 1));
    }
    Formula dec = encode_decision_cnf(g, 4);
    CHECK_THROWS(add_nu(dec, layout_of(g, 4)));
}

TEST_CASE("NU forces used colors to the front") {
    Graph g = figure1_graph();
    int K = 4;
    Formula f = encode_opt(g, K);
    EncodingLayout L = layout_of(g, K);
    add_nu(f, L);
    // force color 3 used while color 2 stays empty: must be UNSAT
    Formula bad = f;
    bad.add_clause({Lit::pos(L.y(3))});
    bad.add_clause({Lit::neg(L.y(2))});
    CHECK(decide(bad).status == SolveStatus::Unsat);
    SolveResult r = minimize(f);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(*r.best_value == 3);
    for (int k = 1; k < K; ++k)
        CHECK((*r.model)[L.y(k) - 1] >= (*r.model)[L.y(k + 1) - 1]);
}

TEST_CASE("CA adds K-1 PB rows of 2n terms") {
    Graph g = myciel_graph(3);
    int K = 20, n = 11;
    Formula f = encode_opt(g, K);
    size_t before = f.pb.size();
    add_ca(f, g, layout_of(g, K));
    REQUIRE(f.pb.size() - before == static_cast<size_t>(K - 1));
    for (size_t i = before; i < f.pb.size(); ++i) {
        CHECK(f.pb[i].terms.size() == static_cast<size_t>(2 * n));
        for (const auto& t : f.pb[i].terms) CHECK(t.coef > 0);
    }
}

TEST_CASE("CA sorts color class sizes") {
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_graph(3 + it % 5, 0.5, rng);
        int n = g.num_vertices(), K = n;
        Formula f = encode_opt(g, K);
        EncodingLayout L = layout_of(g, K);
        add_ca(f, g, L);
        SolveResult r = minimize(f);
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(*r.best_value == brute_force_chromatic(g));
        int prev = n + 1;
        for (int k = 1; k <= K; ++k) {
            int size = 0;
            for (int i = 1; i <= n; ++i) size += (*r.model)[L.x(i, k) - 1];
            CHECK(size <= prev);
            prev = size;
        }
    }
}

TEST_CASE("LI adds nK variables and forces the trivial case") {
    Graph g = myciel_graph(3);
    int K = 4;
    Formula f = encode_opt(g, K);
    int before = f.num_vars;
    add_li(f, g, layout_of(g, K));
    CHECK(f.num_vars - before == 11 * K);

    Graph one(1);
    one.finalize();
    Formula f1 = encode_opt(one, 1);
    add_li(f1, one, layout_of(one, 1));
    CHECK(f1.num_vars == 3);  // x, y, V
    SolveResult r = minimize(f1);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK((*r.model)[2]);  // V(1,1) true with y1 true
}

TEST_CASE("LI kills color permutations and vertex swaps") {
    Graph g = figure1_graph();
    int K = 4;
    Formula base = encode_opt(g, K);
    EncodingLayout L = layout_of(g, K);

    // color swap 1<->2 fixes the base formula
    LitPerm cswap = LitPerm::identity(base.num_vars);
    for (int i = 1; i <= 4; ++i) cswap = swap_vars(cswap, L.x(i, 1), L.x(i, 2));
    cswap = swap_vars(cswap, L.y(1), L.y(2));
    CHECK(is_formula_automorphism(base, cswap));

    // V1<->V2 swap fixes the base formula (they are twins in figure 1)
    LitPerm vswap = LitPerm::identity(base.num_vars);
    for (int j = 1; j <= K; ++j) vswap = swap_vars(vswap, L.x(1, j), L.x(2, j));
    CHECK(is_formula_automorphism(base, vswap));

    Formula li = base;
    add_li(li, g, L);
    CHECK(!is_formula_automorphism(li, extend(cswap, li.num_vars)));
    CHECK(!is_formula_automorphism(li, extend(vswap, li.num_vars)));
}

TEST_CASE("SC pins figure 1 as expected") {
    Graph g = figure1_graph();
    int K = 4;
    Formula f = encode_opt(g, K);
    EncodingLayout L = layout_of(g, K);
    size_t before_cl = f.clauses.size();
    int before_v = f.num_vars;
    add_sc(f, g, L);
    CHECK(f.num_vars == before_v);
    REQUIRE(f.clauses.size() - before_cl == 2u);
    CHECK(f.clauses[before_cl] == Clause{Lit::pos(L.x(3, 1))});
    CHECK(f.clauses[before_cl + 1] == Clause{Lit::pos(L.x(1, 2))});
}

TEST_CASE("SC edge cases") {
    Graph empty(3);
    empty.finalize();
    Formula f = encode_opt(empty, 2);
    size_t before = f.clauses.size();
    add_sc(f, empty, layout_of(empty, 2));
    CHECK(f.clauses.size() - before == 1u);  // no neighbor to pin

    Graph star(5);  // K1,4 with center 1
    for (int leaf = 2; leaf <= 5; ++leaf) star.add_edge(1, leaf);
    star.finalize();
    Formula s = encode_opt(star, 3);
    EncodingLayout L = layout_of(star, 3);
    size_t b = s.clauses.size();
    add_sc(s, star, L);
    CHECK(s.clauses[b] == Clause{Lit::pos(L.x(1, 1))});
    CHECK(s.clauses[b + 1] == Clause{Lit::pos(L.x(2, 2))});
}

TEST_CASE("every config preserves the optimum") {
    std::mt19937 rng(29);
    for (int it = 0; it < 8; ++it) {
        Graph g = random_graph(2 + it % 6, 0.5, rng);
        int n = g.num_vertices(), K = n;
        int chi = brute_force_chromatic(g);
        for (const SbpConfig& cfg : SbpConfig::experiment_rows()) {
            Formula f = encode_opt(g, K);
            apply_sbp(f, g, layout_of(g, K), cfg);
            SolveResult r = minimize(f);
            REQUIRE(r.status == SolveStatus::Optimal);
            CHECK(*r.best_value == chi);
        }
    }
}
