#ifndef GCSYM_LEX_LEADER_HPP
#define GCSYM_LEX_LEADER_HPP

#include <string>
#include <vector>

#include "gcsym/automorphism.hpp"
#include "gcsym/formula.hpp"

namespace gcsym {

struct LexLeaderReport {
    int applied = 0;  // generators that produced constraints
    std::vector<std::string> rejected;  // diagnostics for failed automorphism checks
};

// Per-generator lex-leader constraints: for each generator pi with support
// v_1 < v_2 < ... < v_s, fresh prefix-equality variables p_0..p_s with p_0
// asserted, the ordering clause (~p_{t-1} | ~v_t | pi(v_t)) per position and
// the biconditional definition p_t <-> p_{t-1} & (v_t <-> pi(v_t)). Each
// generator is re-checked as an automorphism of the incoming formula;
// failures are skipped and reported.
LexLeaderReport add_lex_leader(Formula& f, const std::vector<PermGenerator>& gens);

Formula lex_leader_sbp(const std::vector<PermGenerator>& gens, const Formula& f);

}  // namespace gcsym

#endif
