#include "gcsym/opb.hpp"

#include <sstream>
#include <stdexcept>

namespace gcsym {

namespace {

void write_term(std::ostream& out, int coef, Lit lit) {
    out << (coef >= 0 ? "+" : "") << coef << " " << (lit.negative() ? "~x" : "x") << lit.var();
}

struct Token {
    enum Kind { Term, Relation, Number, Semicolon } kind;
    int coef = 0;
    int var = 0;
    bool neg = false;
    std::string rel;
    int value = 0;
};

}  // namespace

std::string emit_opb(const Formula& f) {
    std::ostringstream out;
    out << "* #variable= " << f.num_vars
        << " #constraint= " << (f.pb.size() + f.clauses.size()) << "\n";
    for (const auto& c : f.comments) out << "* " << c << "\n";
    if (f.has_objective()) {
        out << "min:";
        for (const auto& t : f.objective) {
            out << " ";
            write_term(out, t.coef, t.lit);
        }
        out << " ;\n";
    }
    for (const auto& c : f.pb) {
        bool first = true;
        for (const auto& t : c.terms) {
            if (!first) out << " ";
            first = false;
            write_term(out, t.coef, t.lit);
        }
        out << (c.rel == Rel::Eq ? " = " : " <= ") << c.bound << " ;\n";
    }
    for (const auto& c : f.clauses) {
        bool first = true;
        for (Lit l : c) {
            if (!first) out << " ";
            first = false;
            write_term(out, 1, l);
        }
        out << " >= 1 ;\n";
    }
    return out.str();
}

Formula parse_opb(const std::string& text) {
    Formula f;
    std::istringstream in(text);
    std::string line;
    int declared_vars = 0;
    bool saw_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '*') {
            std::istringstream hs(line);
            std::string star, key;
            hs >> star >> key;
            if (!saw_header && key == "#variable=") {
                hs >> declared_vars;
                saw_header = true;
            } else {
                std::string c = line.size() > 2 ? line.substr(2) : "";
                f.comments.push_back(c);
            }
            continue;
        }
        bool is_objective = false;
        std::string body = line;
        if (body.rfind("min:", 0) == 0) {
            is_objective = true;
            body = body.substr(4);
        }
        std::istringstream ls(body);
        std::vector<PbTerm> terms;
        std::string rel;
        long bound = 0;
        bool done = false;
        std::string tok;
        while (ls >> tok) {
            if (tok == ";") { done = true; break; }
            if (tok == ">=" || tok == "<=" || tok == "=") {
                rel = tok;
                if (!(ls >> bound))
                    throw std::runtime_error("missing bound at line " + std::to_string(lineno));
                continue;
            }
            // coefficient token followed by a literal token
            size_t pos = 0;
            int coef;
            try {
                coef = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("bad token '" + tok + "' at line " + std::to_string(lineno));
            }
            if (pos != tok.size())
                throw std::runtime_error("bad token '" + tok + "' at line " + std::to_string(lineno));
            std::string name;
            if (!(ls >> name))
                throw std::runtime_error("dangling coefficient at line " + std::to_string(lineno));
            bool neg = false;
            if (!name.empty() && name[0] == '~') {
                neg = true;
                name = name.substr(1);
            }
            if (name.empty() || name[0] != 'x')
                throw std::runtime_error("bad literal '" + name + "' at line " + std::to_string(lineno));
            int var;
            try {
                var = std::stoi(name.substr(1), &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("bad literal '" + name + "' at line " + std::to_string(lineno));
            }
            if (pos != name.size() - 1 || var < 1)
                throw std::runtime_error("bad literal '" + name + "' at line " + std::to_string(lineno));
            terms.push_back({coef, neg ? Lit::neg(var) : Lit::pos(var)});
        }
        if (!done) throw std::runtime_error("missing ';' at line " + std::to_string(lineno));
        if (is_objective) {
            if (!rel.empty()) throw std::runtime_error("relation in objective at line " + std::to_string(lineno));
            f.objective = std::move(terms);
            continue;
        }
        if (rel.empty()) throw std::runtime_error("constraint without relation at line " + std::to_string(lineno));
        bool clause_shape = rel == ">=" && bound == 1;
        for (const auto& t : terms) clause_shape = clause_shape && t.coef == 1;
        if (clause_shape) {
            Clause c;
            for (const auto& t : terms) c.push_back(t.lit);
            if (!f.add_clause(std::move(c)))
                throw std::runtime_error("tautological clause at line " + std::to_string(lineno));
        } else {
            RawRel rr = rel == ">=" ? RawRel::GreaterEq : rel == "<=" ? RawRel::LessEq : RawRel::Eq;
            f.add_pb(normalize_pb(std::move(terms), rr, static_cast<int>(bound)));
        }
    }
    f.num_vars = std::max(declared_vars, max_var_used(f));
    f.roles.assign(f.num_vars, VarRole{});
    return f;
}

std::string emit_dimacs_cnf(const Formula& f) {
    if (!f.pb.empty() || f.has_objective())
        throw std::runtime_error("emit_dimacs_cnf requires a pure CNF formula");
    std::ostringstream out;
    for (const auto& c : f.comments) out << "c " << c << "\n";
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& c : f.clauses) {
        for (Lit l : c) out << (l.negative() ? -l.var() : l.var()) << " ";
        out << "0\n";
    }
    return out.str();
}

}  // namespace gcsym
