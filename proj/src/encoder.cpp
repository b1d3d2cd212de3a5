#include "gcsym/encoder.hpp"

#include <stdexcept>

namespace gcsym {

EncodingLayout layout_of(const Graph& g, int K) { return {g.num_vertices(), K}; }

Formula encode_opt(const Graph& g, int K) {
    if (K < 1) throw std::runtime_error("K must be >= 1");
    const int n = g.num_vertices();
    EncodingLayout L{n, K};
    Formula f;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= K; ++j) f.new_var({VarKind::VertexColor, i, j});
    for (int j = 1; j <= K; ++j) f.new_var({VarKind::ColorUsage, 0, j});

    // exactly-one color per vertex, kept as a native = constraint
    for (int i = 1; i <= n; ++i) {
        PbConstraint c;
        c.rel = Rel::Eq;
        c.bound = 1;
        for (int j = 1; j <= K; ++j) c.terms.push_back({1, Lit::pos(L.x(i, j))});
        f.add_pb(std::move(c));
    }
    for (auto [a, b] : g.edges())
        for (int j = 1; j <= K; ++j)
            f.add_clause({Lit::neg(L.x(a, j)), Lit::neg(L.x(b, j))});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= K; ++j)
            f.add_clause({Lit::neg(L.x(i, j)), Lit::pos(L.y(j))});
    for (int j = 1; j <= K; ++j) {
        Clause c{Lit::neg(L.y(j))};
        for (int i = 1; i <= n; ++i) c.push_back(Lit::pos(L.x(i, j)));
        f.add_clause(std::move(c));
    }
    for (int j = 1; j <= K; ++j) f.objective.push_back({1, Lit::pos(L.y(j))});
    return f;
}

Formula encode_decision_cnf(const Graph& g, int K) {
    if (K < 1) throw std::runtime_error("K must be >= 1");
    const int n = g.num_vertices();
    EncodingLayout L{n, K};
    Formula f;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= K; ++j) f.new_var({VarKind::VertexColor, i, j});
    for (int i = 1; i <= n; ++i) {
        Clause c;
        for (int j = 1; j <= K; ++j) c.push_back(Lit::pos(L.x(i, j)));
        f.add_clause(std::move(c));
    }
    for (auto [a, b] : g.edges())
        for (int j = 1; j <= K; ++j)
            f.add_clause({Lit::neg(L.x(a, j)), Lit::neg(L.x(b, j))});
    return f;
}

}  // namespace gcsym
