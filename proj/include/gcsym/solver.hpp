#ifndef GCSYM_SOLVER_HPP
#define GCSYM_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcsym/formula.hpp"

namespace gcsym {

enum class SolveStatus { Optimal, Sat, Unsat, Timeout };

std::string to_string(SolveStatus s);

struct SolveStats {
    long long decisions = 0;
    long long propagations = 0;
    long long conflicts = 0;
    long long restarts = 0;
    double elapsed_s = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Timeout;
    std::optional<int> best_value;
    std::optional<std::vector<bool>> model;  // model[v-1] for variable v
    SolveStats stats;

    std::string to_json() const;
};

struct SolverOptions {
    double time_limit_s = 1000.0;   // mirrors the 1000 s experiment budget
    long long conflict_limit = -1;  // < 0 means unlimited
    unsigned seed = 0;
    bool learning = true;           // chronological DPLL when disabled
};

// DLL/CDCL search over CNF clauses plus counter-propagated PB constraints.
// decide() ignores the objective; minimize() runs the linear-search loop,
// tightening an objective bound after each satisfying assignment.
class Solver {
  public:
    explicit Solver(const Formula& f, SolverOptions opts = {});
    ~Solver();
    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;

    SolveResult decide();
    SolveResult minimize();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SolveResult decide(const Formula& f, SolverOptions opts = {});
SolveResult minimize(const Formula& f, SolverOptions opts = {});

// Single-constraint slack propagation, exposed for direct testing. The
// assignment is per-variable: -1 false, 0 unassigned, +1 true (index v-1).
struct PbPropagation {
    bool conflict = false;
    std::vector<Lit> implied;  // literals forced true, in term order
};
PbPropagation propagate_pb(const PbConstraint& c, const std::vector<int8_t>& assignment);

// Model check used by the solver before reporting SAT and by tests.
bool satisfies(const Formula& f, const std::vector<bool>& model);
int objective_value(const Formula& f, const std::vector<bool>& model);

}  // namespace gcsym

#endif
