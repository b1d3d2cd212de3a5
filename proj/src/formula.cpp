#include "gcsym/formula.hpp"

#include <algorithm>
#include <map>

namespace gcsym {

std::optional<Clause> normalize_clause(Clause c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i].var() == c[i + 1].var()) return std::nullopt;  // x and ~x
    return c;
}

bool Formula::add_clause(Clause c) {
    auto norm = normalize_clause(std::move(c));
    if (!norm) return false;
    clauses.push_back(std::move(*norm));
    return true;
}

PbConstraint normalize_pb(std::vector<PbTerm> terms, RawRel rel, int bound) {
    if (rel == RawRel::GreaterEq) {
        for (auto& t : terms) t.coef = -t.coef;
        bound = -bound;
        rel = RawRel::LessEq;
    }
    // Merge duplicate variables first, folding opposite phases via ~x = 1-x.
    std::map<int, int> coef_on_pos;  // var -> coefficient on the positive literal
    for (const auto& t : terms) {
        if (t.coef == 0) continue;
        if (t.lit.negative()) {
            // c*~x = c - c*x
            bound -= t.coef;
            coef_on_pos[t.lit.var()] -= t.coef;
        } else {
            coef_on_pos[t.lit.var()] += t.coef;
        }
    }
    PbConstraint out;
    out.rel = rel == RawRel::Eq ? Rel::Eq : Rel::LessEq;
    for (auto [var, c] : coef_on_pos) {
        if (c == 0) continue;
        if (c > 0) {
            out.terms.push_back({c, Lit::pos(var)});
        } else {
            // c*x = c - c*~x
            bound -= c;
            out.terms.push_back({-c, Lit::neg(var)});
        }
    }
    out.bound = bound;
    return out;
}

int max_var_used(const Formula& f) {
    int m = 0;
    for (const auto& c : f.clauses)
        for (Lit l : c) m = std::max(m, l.var());
    for (const auto& c : f.pb)
        for (const auto& t : c.terms) m = std::max(m, t.lit.var());
    for (const auto& t : f.objective) m = std::max(m, t.lit.var());
    return m;
}

bool well_formed(const Formula& f, std::string* why) {
    if (max_var_used(f) > f.num_vars) {
        if (why) *why = "variable id exceeds num_vars";
        return false;
    }
    for (const auto& c : f.clauses) {
        if (c.empty()) {
            if (why) *why = "empty clause";
            return false;
        }
    }
    for (const auto& c : f.pb) {
        for (const auto& t : c.terms) {
            if (t.coef <= 0) {
                if (why) *why = "non-positive PB coefficient";
                return false;
            }
        }
    }
    return true;
}

}  // namespace gcsym
