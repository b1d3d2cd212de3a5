#ifndef GCSYM_OPB_HPP
#define GCSYM_OPB_HPP

#include <string>

#include "gcsym/formula.hpp"

namespace gcsym {

// Pseudo-Boolean competition style text. Clauses are written as >= 1
// constraints over +1 terms, negation as ~x. Comments on the Formula are
// carried through, so emit(parse(emit(f))) is byte-identical to emit(f).
std::string emit_opb(const Formula& f);
Formula parse_opb(const std::string& text);

// DIMACS CNF output for pure-CNF formulas; throws if PB constraints or an
// objective are present.
std::string emit_dimacs_cnf(const Formula& f);

}  // namespace gcsym

#endif
