#include "gcsym/lex_leader.hpp"

#include <utility>

namespace gcsym {

LexLeaderReport add_lex_leader(Formula& f, const std::vector<PermGenerator>& gens) {
    LexLeaderReport report;
    const Formula snapshot = f;  // generators must fix the formula as given
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        const PermGenerator& pi = gens[gi];
        if (pi.is_identity()) continue;
        if (!is_formula_automorphism(snapshot, pi)) {
            report.rejected.push_back("generator " + std::to_string(gi + 1) + " " +
                                      pi.to_cycles() + " is not an automorphism");
            continue;
        }
        std::vector<int> support = pi.support_vars();
        // p_0 .. p_s; p_t means "v_1..v_t all agree with their images".
        std::vector<Lit> p;
        p.reserve(support.size() + 1);
        for (size_t t = 0; t <= support.size(); ++t)
            p.push_back(Lit::pos(f.new_var({VarKind::Auxiliary,
                                            static_cast<int>(gi + 1),
                                            static_cast<int>(t)})));
        f.add_clause({p[0]});
        for (size_t t = 1; t <= support.size(); ++t) {
            Lit a = Lit::pos(support[t - 1]);
            Lit b = pi.map(a);
            f.add_clause({~p[t - 1], ~a, b});  // assignment <=lex image
            // p_t <-> p_{t-1} & (a <-> b)
            f.add_clause({~p[t], p[t - 1]});
            f.add_clause({~p[t], ~a, b});
            f.add_clause({~p[t], a, ~b});
            f.add_clause({~p[t - 1], a, b, p[t]});
            f.add_clause({~p[t - 1], ~a, ~b, p[t]});
        }
        ++report.applied;
    }
    if (report.applied > 0)
        f.comments.push_back("lex-leader sbp over " + std::to_string(report.applied) +
                             " generators");
    return report;
}

Formula lex_leader_sbp(const std::vector<PermGenerator>& gens, const Formula& f) {
    Formula out = f;
    add_lex_leader(out, gens);
    return out;
}

}  // namespace gcsym
