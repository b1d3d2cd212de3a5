#ifndef GCSYM_PERM_HPP
#define GCSYM_PERM_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gcsym/formula.hpp"

namespace gcsym {

using BigInt = boost::multiprecision::cpp_int;

// A formula symmetry: a permutation of the 2*num_vars literal codes that is
// Boolean-consistent (complement pairs map to complement pairs).
struct LitPerm {
    std::vector<int> image;  // image[code] = mapped literal code

    int domain() const { return static_cast<int>(image.size()); }
    Lit map(Lit l) const { return Lit::from_code(image[l.code]); }
    bool is_identity() const;
    bool boolean_consistent() const;
    std::vector<int> support_vars() const;  // 1-based, ascending

    static LitPerm identity(int num_vars);
    LitPerm compose(const LitPerm& then) const;  // this first, then `then`
    LitPerm inverse() const;

    // Cycle notation over literals, e.g. "(x3 x7)(x4 x8)"; complement-image
    // cycles are omitted.
    std::string to_cycles() const;
};

// Syntactic fixpoint check: the permuted constraint multiset (clauses, PB
// rows, objective) equals the original.
bool is_formula_automorphism(const Formula& f, const LitPerm& p);

// Exact order of the generated permutation group (Schreier-Sims).
BigInt group_order(const std::vector<LitPerm>& gens);

}  // namespace gcsym

#endif
