#ifndef GCSYM_FORMULA_HPP
#define GCSYM_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcsym {

// A literal over 1-based variable ids. Encoded as 2*(var-1)+sign so it can
// index arrays directly; sign bit set means the negative phase.
struct Lit {
    int code = -1;

    Lit() = default;
    static Lit pos(int var) { return Lit{2 * (var - 1)}; }
    static Lit neg(int var) { return Lit{2 * (var - 1) + 1}; }
    static Lit from_code(int c) { return Lit{c}; }

    int var() const { return code / 2 + 1; }
    bool negative() const { return code & 1; }
    Lit operator~() const { return Lit{code ^ 1}; }

    bool operator==(const Lit& o) const { return code == o.code; }
    bool operator!=(const Lit& o) const { return code != o.code; }
    bool operator<(const Lit& o) const { return code < o.code; }

  private:
    explicit Lit(int c) : code(c) {}
};

using Clause = std::vector<Lit>;

enum class Rel { LessEq, Eq };

struct PbTerm {
    int coef = 0;  // positive in normalized form
    Lit lit;
};

// Linear constraint over literals, kept in normalized form: all coefficients
// positive, relation <= or =, no variable appearing twice.
struct PbConstraint {
    std::vector<PbTerm> terms;
    Rel rel = Rel::LessEq;
    int bound = 0;
};

enum class VarKind { VertexColor, ColorUsage, LowestIndex, Auxiliary };

struct VarRole {
    VarKind kind = VarKind::Auxiliary;
    int i = 0;  // vertex index for VertexColor/LowestIndex
    int j = 0;  // color index where applicable
};

struct Formula {
    int num_vars = 0;
    std::vector<VarRole> roles;  // indexed by var-1
    std::vector<Clause> clauses;
    std::vector<PbConstraint> pb;
    std::vector<PbTerm> objective;  // empty means no objective (MIN sense)
    std::vector<std::string> comments;

    int new_var(VarRole role = {}) {
        roles.push_back(role);
        return ++num_vars;
    }

    // Sorts and de-duplicates; returns false (and adds nothing) for
    // tautologies. Empty input clauses are a logic error upstream.
    bool add_clause(Clause c);
    void add_pb(PbConstraint c) { pb.push_back(std::move(c)); }

    bool has_objective() const { return !objective.empty(); }
};

// Rewrites an arbitrary linear constraint (signed coefficients, any of
// <=, >=, =) into normalized form using ~x = 1 - x.
enum class RawRel { LessEq, GreaterEq, Eq };
PbConstraint normalize_pb(std::vector<PbTerm> terms, RawRel rel, int bound);

// Canonical form of a clause: sorted, de-duplicated. Returns nullopt for
// tautologies.
std::optional<Clause> normalize_clause(Clause c);

// Largest variable id referenced anywhere; 0 for an empty formula.
int max_var_used(const Formula& f);

// Checks that every referenced variable id is in [1, num_vars].
bool well_formed(const Formula& f, std::string* why = nullptr);

}  // namespace gcsym

#endif
