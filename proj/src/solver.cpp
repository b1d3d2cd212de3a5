#include "gcsym/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace gcsym {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "OPTIMAL";
        case SolveStatus::Sat: return "SAT";
        case SolveStatus::Unsat: return "UNSAT";
        case SolveStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

std::string SolveResult::to_json() const {
    nlohmann::json j;
    j["status"] = to_string(status);
    if (best_value) j["value"] = *best_value;
    j["stats"] = {{"decisions", stats.decisions},
                  {"propagations", stats.propagations},
                  {"conflicts", stats.conflicts},
                  {"restarts", stats.restarts},
                  {"elapsed_s", stats.elapsed_s}};
    if (model) {
        std::vector<int> lits;
        for (size_t v = 0; v < model->size(); ++v)
            lits.push_back((*model)[v] ? static_cast<int>(v + 1) : -static_cast<int>(v + 1));
        j["model"] = lits;
    }
    return j.dump();
}

bool satisfies(const Formula& f, const std::vector<bool>& model) {
    auto lit_true = [&model](Lit l) {
        bool v = model[l.var() - 1];
        return l.negative() ? !v : v;
    };
    for (const auto& c : f.clauses) {
        bool ok = false;
        for (Lit l : c)
            if (lit_true(l)) { ok = true; break; }
        if (!ok) return false;
    }
    for (const auto& c : f.pb) {
        long long sum = 0;
        for (const auto& t : c.terms)
            if (lit_true(t.lit)) sum += t.coef;
        if (c.rel == Rel::Eq ? sum != c.bound : sum > c.bound) return false;
    }
    return true;
}

int objective_value(const Formula& f, const std::vector<bool>& model) {
    int sum = 0;
    for (const auto& t : f.objective) {
        bool v = model[t.lit.var() - 1];
        if (t.lit.negative() ? !v : v) sum += t.coef;
    }
    return sum;
}

PbPropagation propagate_pb(const PbConstraint& c, const std::vector<int8_t>& assignment) {
    auto val = [&assignment](Lit l) -> int {  // -1 false, 0 undef, 1 true
        int8_t v = assignment[l.var() - 1];
        if (v == 0) return 0;
        return (v > 0) != l.negative() ? 1 : -1;
    };
    long long sum_true = 0, sum_possible = 0;
    for (const auto& t : c.terms) {
        int v = val(t.lit);
        if (v == 1) sum_true += t.coef;
        if (v != -1) sum_possible += t.coef;
    }
    PbPropagation out;
    if (sum_true > c.bound) { out.conflict = true; return out; }
    if (c.rel == Rel::Eq && sum_possible < c.bound) { out.conflict = true; return out; }
    long long slack = c.bound - sum_true;
    for (const auto& t : c.terms) {
        if (val(t.lit) != 0) continue;
        if (t.coef > slack) out.implied.push_back(~t.lit);
        else if (c.rel == Rel::Eq && sum_possible - t.coef < c.bound) out.implied.push_back(t.lit);
    }
    return out;
}

namespace {

int luby(int i) {  // 1,1,2,1,1,2,4,...
    int k = 1;
    while ((1 << k) - 1 < i + 1) ++k;
    while ((1 << k) - 1 != i + 1) {
        i -= (1 << (k - 1)) - 1;
        k = 1;
        while ((1 << k) - 1 < i + 1) ++k;
    }
    return 1 << (k - 1);
}

}  // namespace

struct Solver::Impl {
    enum { kNone = 0, kClause = 1, kPbLe = 2, kPbGe = 3 };
    enum class PropStatus { Ok, Conflict };

    struct Cls {
        std::vector<int> lits;
        bool learned = false;
        bool deleted = false;
        double act = 0;
    };
    struct Pb {
        std::vector<std::pair<int, int>> terms;  // (coef, lit)
        long long bound = 0;
        bool is_eq = false;
        long long sum_true = 0;
        long long sum_possible = 0;
    };
    struct Reason {
        int kind = kNone;
        int idx = -1;
    };
    struct Confl {
        int kind = kNone;
        int idx = -1;
        explicit operator bool() const { return kind != kNone; }
    };

    const Formula& f;
    SolverOptions opts;
    int nv = 0;

    std::vector<Cls> clauses;
    std::vector<std::vector<int>> watches;
    std::vector<Pb> pbs;
    std::vector<std::vector<std::pair<int, int>>> occ;

    std::vector<int8_t> assigns;  // per var: -1,0,1
    std::vector<int> vlevel;
    std::vector<int> trail_pos;
    std::vector<Reason> reasons;
    std::vector<int> trail;
    std::vector<int> trail_lim;
    std::vector<uint8_t> level_flipped;  // chronological path only
    size_t qhead = 0;

    std::vector<double> activity;
    double var_inc = 1.0;
    double cla_inc = 1.0;
    std::vector<int> heap;
    std::vector<int> heap_pos;
    std::vector<uint8_t> polarity;
    std::vector<uint8_t> seen;

    SolveStats stats;
    std::chrono::steady_clock::time_point start_time;
    long long learned_count = 0;
    long long reduce_limit = 0;
    bool root_unsat = false;
    bool budget_exhausted = false;

    explicit Impl(const Formula& formula, SolverOptions o) : f(formula), opts(o) {
        std::string why;
        if (!well_formed(f, &why)) throw std::runtime_error("malformed formula: " + why);
        nv = f.num_vars;
        watches.assign(2 * nv, {});
        occ.assign(2 * nv, {});
        assigns.assign(nv, 0);
        vlevel.assign(nv, 0);
        trail_pos.assign(nv, 0);
        reasons.assign(nv, {});
        activity.assign(nv, 0.0);
        heap_pos.assign(nv, -1);
        polarity.assign(nv, 0);  // branch false first: fewer colors used
        seen.assign(nv, 0);

        std::mt19937 rng(opts.seed);
        std::uniform_real_distribution<double> jitter(0.0, 1e-6);
        for (int v = 0; v < nv; ++v) activity[v] = jitter(rng);
        for (int v = 0; v < nv; ++v) heap_insert(v);

        for (const auto& c : f.clauses) {
            std::vector<int> lits;
            lits.reserve(c.size());
            for (Lit l : c) lits.push_back(l.code);
            add_clause_internal(std::move(lits), false);
            if (root_unsat) return;
        }
        for (const auto& c : f.pb) add_pb_internal(c);
        reduce_limit = std::max<long long>(4000, static_cast<long long>(f.clauses.size()) / 3);
        start_time = std::chrono::steady_clock::now();
    }

    // ---- assignment primitives ----
    int value_lit(int l) const {  // -1 false, 0 undef, 1 true
        int8_t a = assigns[l >> 1];
        if (a == 0) return 0;
        return (a > 0) != static_cast<bool>(l & 1) ? 1 : -1;
    }
    int level() const { return static_cast<int>(trail_lim.size()); }

    bool enqueue(int l, Reason r) {
        int v = l >> 1;
        int val = value_lit(l);
        if (val == 1) return true;
        if (val == -1) return false;
        assigns[v] = (l & 1) ? -1 : 1;
        vlevel[v] = level();
        reasons[v] = r;
        trail_pos[v] = static_cast<int>(trail.size());
        trail.push_back(l);
        // PB counters track the assignment itself, not the propagation
        // queue, so cancel_until can undo them uniformly.
        for (auto [pi, coef] : occ[l]) pbs[pi].sum_true += coef;
        for (auto [pi, coef] : occ[l ^ 1]) pbs[pi].sum_possible -= coef;
        return true;
    }

    void cancel_until(int lvl) {
        if (level() <= lvl) return;
        int bound = trail_lim[lvl];
        for (int i = static_cast<int>(trail.size()) - 1; i >= bound; --i) {
            int l = trail[i];
            int v = l >> 1;
            for (auto [pi, coef] : occ[l]) pbs[pi].sum_true -= coef;
            for (auto [pi, coef] : occ[l ^ 1]) pbs[pi].sum_possible += coef;
            polarity[v] = assigns[v] > 0;
            assigns[v] = 0;
            reasons[v] = {};
            if (heap_pos[v] < 0) heap_insert(v);
        }
        trail.resize(bound);
        trail_lim.resize(lvl);
        level_flipped.resize(lvl);
        qhead = trail.size();
    }

    // ---- database ----
    void add_clause_internal(std::vector<int> lits, bool learned) {
        if (lits.empty()) { root_unsat = true; return; }
        if (lits.size() == 1) {
            if (!enqueue(lits[0], {})) root_unsat = true;
            return;
        }
        int ci = static_cast<int>(clauses.size());
        clauses.push_back({std::move(lits), learned, false, learned ? cla_inc : 0.0});
        watches[clauses[ci].lits[0]].push_back(ci);
        watches[clauses[ci].lits[1]].push_back(ci);
        if (learned) ++learned_count;
    }

    void add_pb_internal(const PbConstraint& c) {
        Pb pb;
        pb.bound = c.bound;
        pb.is_eq = c.rel == Rel::Eq;
        for (const auto& t : c.terms) pb.terms.emplace_back(t.coef, t.lit.code);
        // counters under the current (level-0) assignment
        for (auto [coef, l] : pb.terms) {
            int v = value_lit(l);
            if (v == 1) pb.sum_true += coef;
            if (v != -1) pb.sum_possible += coef;
        }
        int pi = static_cast<int>(pbs.size());
        pbs.push_back(std::move(pb));
        for (auto [coef, l] : pbs[pi].terms) occ[l].emplace_back(pi, coef);
        Confl cf = pb_check(pi);
        if (cf && level() == 0) root_unsat = true;
    }

    // ---- propagation ----
    Confl pb_check(int pi) {
        Pb& c = pbs[pi];
        if (c.sum_true > c.bound) return {kPbLe, pi};
        if (c.is_eq && c.sum_possible < c.bound) return {kPbGe, pi};
        long long slack = c.bound - c.sum_true;
        for (auto [coef, l] : c.terms) {
            if (value_lit(l) != 0) continue;
            if (coef > slack) {
                if (!enqueue(l ^ 1, {kPbLe, pi})) return {kPbLe, pi};
            } else if (c.is_eq && c.sum_possible - coef < c.bound) {
                if (!enqueue(l, {kPbGe, pi})) return {kPbGe, pi};
            }
        }
        return {};
    }

    Confl propagate() {
        while (qhead < trail.size()) {
            int p = trail[qhead++];
            ++stats.propagations;
            int fl = p ^ 1;  // now false
            auto& ws = watches[fl];
            size_t i = 0, j = 0;
            Confl confl;
            for (; i < ws.size(); ++i) {
                int ci = ws[i];
                Cls& c = clauses[ci];
                if (c.deleted) continue;  // lazily dropped
                if (c.lits[0] == fl) std::swap(c.lits[0], c.lits[1]);
                if (value_lit(c.lits[0]) == 1) { ws[j++] = ci; continue; }
                bool moved = false;
                for (size_t k = 2; k < c.lits.size(); ++k) {
                    if (value_lit(c.lits[k]) != -1) {
                        std::swap(c.lits[1], c.lits[k]);
                        watches[c.lits[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                ws[j++] = ci;
                if (value_lit(c.lits[0]) == -1) {
                    confl = {kClause, ci};
                    for (++i; i < ws.size(); ++i) ws[j++] = ws[i];
                    break;
                }
                enqueue(c.lits[0], {kClause, ci});
            }
            ws.resize(j);
            if (confl) return confl;

            // fixpoint checks on the PB rows this literal touches
            for (auto [pi, coef] : occ[p])
                if (Confl cf = pb_check(pi)) return cf;
            for (auto [pi, coef] : occ[fl])
                if (Confl cf = pb_check(pi)) return cf;
        }
        return {};
    }

    // ---- conflict analysis ----
    // The implicit clause behind an implication/conflict: for clauses the
    // member literals; for PB rows the contributing assigned literals,
    // restricted to those assigned before the implied literal.
    void reason_lits(Confl src, int implied, std::vector<int>& out) {
        out.clear();
        if (src.kind == kClause) {
            for (int l : clauses[src.idx].lits)
                if (l != implied) out.push_back(l);
            return;
        }
        const Pb& c = pbs[src.idx];
        int limit = implied >= 0 ? trail_pos[implied >> 1] : static_cast<int>(trail.size());
        if (src.kind == kPbLe) {
            for (auto [coef, l] : c.terms)
                if (value_lit(l) == 1 && trail_pos[l >> 1] < limit) out.push_back(l ^ 1);
        } else {
            for (auto [coef, l] : c.terms)
                if (value_lit(l) == -1 && trail_pos[l >> 1] < limit && l != implied) out.push_back(l);
        }
    }

    void bump_var(int v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (auto& a : activity) a *= 1e-100;
            var_inc *= 1e-100;
        }
        if (heap_pos[v] >= 0) heap_up(heap_pos[v]);
    }

    // 1UIP scheme; returns the learned clause (asserting literal first) and
    // the backjump level.
    std::pair<std::vector<int>, int> analyze(Confl confl) {
        std::vector<int> learnt{0};
        std::vector<int> cur;
        reason_lits(confl, -1, cur);
        int counter = 0;
        int p = -1;
        int idx = static_cast<int>(trail.size()) - 1;
        for (;;) {
            for (int q : cur) {
                int v = q >> 1;
                if (seen[v] || vlevel[v] == 0) continue;
                seen[v] = 1;
                bump_var(v);
                if (vlevel[v] >= level()) ++counter;
                else learnt.push_back(q);
            }
            while (!seen[trail[idx] >> 1]) --idx;
            p = trail[idx--];
            seen[p >> 1] = 0;
            if (--counter == 0) break;
            reason_lits(reasons[p >> 1].kind == kClause ? Confl{kClause, reasons[p >> 1].idx}
                                                        : Confl{reasons[p >> 1].kind, reasons[p >> 1].idx},
                        p, cur);
        }
        learnt[0] = p ^ 1;
        int bj = 0;
        if (learnt.size() > 1) {
            size_t maxi = 1;
            for (size_t i = 2; i < learnt.size(); ++i)
                if (vlevel[learnt[i] >> 1] > vlevel[learnt[maxi] >> 1]) maxi = i;
            std::swap(learnt[1], learnt[maxi]);
            bj = vlevel[learnt[1] >> 1];
        }
        for (size_t i = 1; i < learnt.size(); ++i) seen[learnt[i] >> 1] = 0;
        return {std::move(learnt), bj};
    }

    void bump_clause(int ci) {
        Cls& c = clauses[ci];
        if (!c.learned) return;
        c.act += cla_inc;
        if (c.act > 1e20) {
            for (auto& cl : clauses)
                if (cl.learned) cl.act *= 1e-20;
            cla_inc *= 1e-20;
        }
    }

    bool clause_locked(int ci) const {
        const Cls& c = clauses[ci];
        int l0 = c.lits[0];
        return value_lit(l0) == 1 && reasons[l0 >> 1].kind == kClause && reasons[l0 >> 1].idx == ci;
    }

    void reduce_db() {
        std::vector<int> cand;
        for (int ci = 0; ci < static_cast<int>(clauses.size()); ++ci) {
            const Cls& c = clauses[ci];
            if (c.learned && !c.deleted && c.lits.size() > 2 && !clause_locked(ci))
                cand.push_back(ci);
        }
        std::sort(cand.begin(), cand.end(),
                  [this](int a, int b) { return clauses[a].act < clauses[b].act; });
        for (size_t i = 0; i < cand.size() / 2; ++i) {
            Cls& c = clauses[cand[i]];
            c.deleted = true;
            c.lits.clear();
            c.lits.shrink_to_fit();
            --learned_count;
        }
        reduce_limit = static_cast<long long>(reduce_limit * 1.2);
    }

    // ---- branching ----
    void heap_insert(int v) {
        heap_pos[v] = static_cast<int>(heap.size());
        heap.push_back(v);
        heap_up(heap_pos[v]);
    }
    void heap_up(int i) {
        int v = heap[i];
        while (i > 0) {
            int pi = (i - 1) / 2;
            if (activity[heap[pi]] >= activity[v]) break;
            heap[i] = heap[pi];
            heap_pos[heap[i]] = i;
            i = pi;
        }
        heap[i] = v;
        heap_pos[v] = i;
    }
    void heap_down(int i) {
        int v = heap[i];
        int n = static_cast<int>(heap.size());
        for (;;) {
            int c = 2 * i + 1;
            if (c >= n) break;
            if (c + 1 < n && activity[heap[c + 1]] > activity[heap[c]]) ++c;
            if (activity[heap[c]] <= activity[v]) break;
            heap[i] = heap[c];
            heap_pos[heap[i]] = i;
            i = c;
        }
        heap[i] = v;
        heap_pos[v] = i;
    }
    int heap_pop() {
        int v = heap[0];
        heap_pos[v] = -1;
        heap[0] = heap.back();
        heap.pop_back();
        if (!heap.empty()) {
            heap_pos[heap[0]] = 0;
            heap_down(0);
        }
        return v;
    }
    int pick_branch_var() {
        while (!heap.empty()) {
            int v = heap_pop();
            if (assigns[v] == 0) return v;
        }
        return -1;
    }

    bool out_of_budget() {
        if (opts.conflict_limit >= 0 && stats.conflicts > opts.conflict_limit) return true;
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
        return elapsed > opts.time_limit_s;
    }

    // ---- search ----
    enum class SearchOut { Sat, Unsat, Restart, Budget };

    SearchOut search(long long restart_budget) {
        long long conflicts_here = 0;
        for (;;) {
            Confl confl = propagate();
            if (confl) {
                ++stats.conflicts;
                ++conflicts_here;
                if (confl.kind == kClause) bump_clause(confl.idx);
                if (level() == 0) return SearchOut::Unsat;
                if (opts.learning) {
                    auto [learnt, bj] = analyze(confl);
                    cancel_until(bj);
                    if (learnt.size() == 1) {
                        if (!enqueue(learnt[0], {})) return SearchOut::Unsat;
                    } else {
                        int ci = static_cast<int>(clauses.size());
                        add_clause_internal(learnt, true);
                        bump_clause(ci);
                        enqueue(learnt[0], {kClause, ci});
                    }
                    var_inc /= 0.95;
                    cla_inc /= 0.999;
                } else {
                    int lvl = level();
                    while (lvl > 0 && level_flipped[lvl - 1]) --lvl;
                    if (lvl == 0) return SearchOut::Unsat;
                    int d = trail[trail_lim[lvl - 1]];
                    cancel_until(lvl - 1);
                    trail_lim.push_back(static_cast<int>(trail.size()));
                    level_flipped.push_back(1);
                    enqueue(d ^ 1, {});
                }
                if ((stats.conflicts & 255) == 0 && out_of_budget()) return SearchOut::Budget;
                continue;
            }
            if (conflicts_here >= restart_budget) {
                cancel_until(0);
                return SearchOut::Restart;
            }
            if (opts.learning && learned_count >= reduce_limit) reduce_db();
            if (static_cast<int>(trail.size()) == nv) return SearchOut::Sat;
            if ((stats.decisions & 255) == 0 && out_of_budget()) return SearchOut::Budget;
            int v = pick_branch_var();
            if (v < 0) return SearchOut::Sat;  // spare vars default false
            ++stats.decisions;
            trail_lim.push_back(static_cast<int>(trail.size()));
            level_flipped.push_back(0);
            enqueue(2 * v + (polarity[v] ? 0 : 1), {});
        }
    }

    std::vector<bool> extract_model() const {
        std::vector<bool> m(nv);
        for (int v = 0; v < nv; ++v) m[v] = assigns[v] > 0;
        return m;
    }

    SolveStatus run() {
        if (root_unsat) return SolveStatus::Unsat;
        for (int restarts = 0;; ++restarts) {
            SearchOut out = search(64LL * luby(restarts));
            if (out == SearchOut::Restart) {
                ++stats.restarts;
                continue;
            }
            if (out == SearchOut::Sat) return SolveStatus::Sat;
            if (out == SearchOut::Unsat) return SolveStatus::Unsat;
            return SolveStatus::Timeout;
        }
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    }
};

Solver::Solver(const Formula& f, SolverOptions opts) : impl_(std::make_unique<Impl>(f, opts)) {}
Solver::~Solver() = default;

SolveResult Solver::decide() {
    Impl& s = *impl_;
    SolveResult res;
    SolveStatus st = s.run();
    res.stats = s.stats;
    res.stats.elapsed_s = s.elapsed();
    res.status = st;
    if (st == SolveStatus::Sat) {
        auto model = s.extract_model();
        if (!satisfies(s.f, model))
            throw std::logic_error("internal error: model fails verification");
        res.model = std::move(model);
    }
    return res;
}

SolveResult Solver::minimize() {
    Impl& s = *impl_;
    if (!s.f.has_objective()) throw std::runtime_error("minimize requires an objective");
    SolveResult best;
    best.status = SolveStatus::Timeout;
    for (;;) {
        SolveStatus st = s.run();
        if (st == SolveStatus::Sat) {
            auto model = s.extract_model();
            if (!satisfies(s.f, model))
                throw std::logic_error("internal error: model fails verification");
            int value = objective_value(s.f, model);
            if (!best.best_value || value < *best.best_value) {
                best.best_value = value;
                best.model = std::move(model);
            }
            s.cancel_until(0);
            // tighten: objective <= value - 1
            PbConstraint bound = normalize_pb(s.f.objective, RawRel::LessEq, value - 1);
            if (bound.bound < 0) { best.status = SolveStatus::Optimal; break; }
            s.add_pb_internal(bound);
            if (s.root_unsat) { best.status = SolveStatus::Optimal; break; }
            continue;
        }
        if (st == SolveStatus::Unsat) {
            best.status = best.best_value ? SolveStatus::Optimal : SolveStatus::Unsat;
            break;
        }
        best.status = SolveStatus::Timeout;  // keeps the incumbent, if any
        break;
    }
    best.stats = s.stats;
    best.stats.elapsed_s = s.elapsed();
    return best;
}

SolveResult decide(const Formula& f, SolverOptions opts) { return Solver(f, opts).decide(); }
SolveResult minimize(const Formula& f, SolverOptions opts) { return Solver(f, opts).minimize(); }

}  // namespace gcsym
