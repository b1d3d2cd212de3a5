#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcsym/formula.hpp"

using namespace gcsym;

TEST_CASE("literal codes") {
    CHECK(Lit::pos(1).code == 0);
    CHECK(Lit::neg(1).code == 1);
    CHECK(Lit::pos(7).code == 12);
    CHECK((~Lit::pos(3)) == Lit::neg(3));
    CHECK((~Lit::neg(3)) == Lit::pos(3));
    CHECK(Lit::neg(5).var() == 5);
    CHECK(Lit::neg(5).negative());
    CHECK(!Lit::pos(5).negative());
    CHECK(Lit::from_code(9) == Lit::neg(5));
}

TEST_CASE("normalize_clause sorts, dedups and kills tautologies") {
    auto c = normalize_clause({Lit::pos(3), Lit::neg(1), Lit::pos(3)});
    REQUIRE(c.has_value());
    CHECK(*c == Clause{Lit::neg(1), Lit::pos(3)});
    CHECK(!normalize_clause({Lit::pos(2), Lit::neg(2)}).has_value());
}

TEST_CASE("add_clause drops tautologies") {
    Formula f;
    f.new_var();
    f.new_var();
    CHECK(f.add_clause({Lit::pos(1), Lit::neg(2)}));
    CHECK(!f.add_clause({Lit::pos(1), Lit::neg(1)}));
    CHECK(f.clauses.size() == 1);
}

namespace {

// Evaluates a raw constraint and its normalized form on every assignment of
// the referenced variables; they must agree everywhere.
bool equivalent(const std::vector<PbTerm>& terms, RawRel rel, int bound) {
    PbConstraint norm = normalize_pb(terms, rel, bound);
    int maxv = 0;
    for (const auto& t : terms) maxv = std::max(maxv, t.lit.var());
    for (const auto& t : norm.terms) maxv = std::max(maxv, t.lit.var());
    for (int mask = 0; mask < (1 << maxv); ++mask) {
        auto lit_val = [&](Lit l) {
            bool v = mask >> (l.var() - 1) & 1;
            return l.negative() ? !v : v;
        };
        long long raw = 0, nrm = 0;
        for (const auto& t : terms) raw += t.coef * (lit_val(t.lit) ? 1 : 0);
        for (const auto& t : norm.terms) nrm += t.coef * (lit_val(t.lit) ? 1 : 0);
        bool raw_ok = rel == RawRel::LessEq      ? raw <= bound
                      : rel == RawRel::GreaterEq ? raw >= bound
                                                 : raw == bound;
        bool nrm_ok = norm.rel == Rel::LessEq ? nrm <= norm.bound : nrm == norm.bound;
        if (raw_ok != nrm_ok) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("normalize_pb output form") {
    // cardinality ordering shape: sum x1..x2 - sum x3..x4 >= 0
    PbConstraint c = normalize_pb({{1, Lit::pos(1)}, {1, Lit::pos(2)}, {-1, Lit::pos(3)}, {-1, Lit::pos(4)}},
                                  RawRel::GreaterEq, 0);
    CHECK(c.rel == Rel::LessEq);
    for (const auto& t : c.terms) CHECK(t.coef > 0);
    CHECK(c.terms.size() == 4);
    CHECK(equivalent({{1, Lit::pos(1)}, {1, Lit::pos(2)}, {-1, Lit::pos(3)}, {-1, Lit::pos(4)}},
                     RawRel::GreaterEq, 0));
}

TEST_CASE("normalize_pb folds phases onto one literal per variable") {
    // ~x2 >= 1 collapses to x2 <= 0
    PbConstraint c = normalize_pb({{1, Lit::neg(2)}}, RawRel::GreaterEq, 1);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].coef == 1);
    CHECK(c.terms[0].lit == Lit::pos(2));
    CHECK(c.bound == 0);
    CHECK(equivalent({{1, Lit::neg(2)}}, RawRel::GreaterEq, 1));
}

TEST_CASE("normalize_pb is semantics-preserving") {
    CHECK(equivalent({{2, Lit::pos(1)}, {1, Lit::pos(2)}}, RawRel::LessEq, 2));
    CHECK(equivalent({{-3, Lit::pos(1)}, {2, Lit::neg(2)}, {5, Lit::pos(3)}}, RawRel::GreaterEq, 1));
    CHECK(equivalent({{1, Lit::pos(1)}, {1, Lit::pos(2)}, {1, Lit::pos(3)}}, RawRel::Eq, 1));
    CHECK(equivalent({{-2, Lit::neg(1)}, {4, Lit::pos(2)}}, RawRel::Eq, 2));
    // duplicate variable folding: x + x <= 1 is x <= 0 (x false)
    CHECK(equivalent({{1, Lit::pos(1)}, {1, Lit::pos(1)}}, RawRel::LessEq, 1));
    CHECK(equivalent({{1, Lit::pos(1)}, {1, Lit::neg(1)}}, RawRel::LessEq, 1));
}

TEST_CASE("well_formed catches dangling variables") {
    Formula f;
    f.new_var();
    f.add_clause({Lit::pos(1)});
    CHECK(well_formed(f));
    f.clauses.push_back({Lit::pos(4)});
    std::string why;
    CHECK(!well_formed(f, &why));
    CHECK(!why.empty());
    CHECK(max_var_used(f) == 4);
}
