#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gcsym/encoder.hpp"
#include "gcsym/graph.hpp"
#include "gcsym/opb.hpp"
#include "gcsym/sbp.hpp"

using namespace gcsym;

TEST_CASE("emit shapes") {
    Formula f;
    f.new_var();
    f.new_var();
    f.add_clause({Lit::pos(1), Lit::neg(2)});
    std::string text = emit_opb(f);
    CHECK(text.find("+1 x1 +1 ~x2 >= 1 ;") != std::string::npos);
    CHECK(text.find("min:") == std::string::npos);  // no objective, no min line

    Formula g;
    for (int i = 0; i < 3; ++i) g.new_var();
    g.add_pb(normalize_pb({{1, Lit::pos(1)}, {1, Lit::pos(2)}, {1, Lit::pos(3)}}, RawRel::Eq, 1));
    CHECK(emit_opb(g).find("+1 x1 +1 x2 +1 x3 = 1 ;") != std::string::npos);

    g.objective = {{1, Lit::pos(1)}, {1, Lit::pos(2)}};
    CHECK(emit_opb(g).find("min: +1 x1 +1 x2 ;") != std::string::npos);
}

TEST_CASE("parse inverts emit") {
    Formula f;
    for (int i = 0; i < 4; ++i) f.new_var();
    f.add_clause({Lit::pos(1), Lit::neg(2), Lit::pos(4)});
    f.add_clause({Lit::neg(3)});
    f.add_pb(normalize_pb({{2, Lit::pos(1)}, {3, Lit::neg(4)}}, RawRel::LessEq, 3));
    f.objective = {{1, Lit::pos(3)}, {2, Lit::pos(4)}};
    Formula g = parse_opb(emit_opb(f));
    CHECK(g.num_vars == f.num_vars);
    CHECK(g.clauses == f.clauses);
    CHECK(g.pb.size() == f.pb.size());
    CHECK(emit_opb(g) == emit_opb(f));
}

TEST_CASE("round trip is byte identical on real encodings") {
    std::mt19937 rng(23);
    for (const SbpConfig& cfg : SbpConfig::experiment_rows()) {
        Graph g = myciel_graph(3);
        Formula f = encode_opt(g, 5);
        apply_sbp(f, g, layout_of(g, 5), cfg);
        std::string once = emit_opb(f);
        std::string twice = emit_opb(parse_opb(once));
        CHECK(once == twice);
    }
}

TEST_CASE("parser tolerance and errors") {
    // the header is advisory: missing header or extra vars widen num_vars
    CHECK(parse_opb("+1 x1 >= 1 ;\n").num_vars == 1);
    CHECK(parse_opb("* #variable= 1 #constraint= 1\n+1 x2 >= 1 ;\n").num_vars == 2);

    CHECK_THROWS(parse_opb("* #variable= 1 #constraint= 1\n+1 y1 >= 1 ;\n"));
    CHECK_THROWS(parse_opb("* #variable= 1 #constraint= 1\n+1 x1 >= 1\n"));  // missing ;
    CHECK_THROWS(parse_opb("* #variable= 1 #constraint= 1\n+1 x1 1 ;\n"));   // no relation
    CHECK_THROWS(parse_opb("* #variable= 1 #constraint= 1\nzz x1 >= 1 ;\n"));
}

TEST_CASE("dimacs cnf output") {
    Graph g = complete_graph(3);
    Formula f = encode_decision_cnf(g, 3);
    std::string text = emit_dimacs_cnf(f);
    CHECK(text.find("p cnf 9 ") != std::string::npos);
    CHECK(text.find(" 0\n") != std::string::npos);
    CHECK_THROWS(emit_dimacs_cnf(encode_opt(g, 3)));  // PB rows present
}
