#include "afreg/sat.hpp"

#include <cmath>
#include <cstdlib>

namespace afreg {

namespace {

// assign[v]: 0 unassigned, +1 true, -1 false.
enum class ClauseState { Satisfied, Conflict, Unit, Unresolved };

ClauseState clause_state(const std::vector<int>& clause,
                         const std::vector<int>& assign, int& unit_lit) {
    int unassigned = 0;
    unit_lit = 0;
    for (int lit : clause) {
        int v = std::abs(lit);
        int a = assign[v];
        if (a == 0) {
            ++unassigned;
            unit_lit = lit;
        } else if ((a > 0) == (lit > 0)) {
            return ClauseState::Satisfied;
        }
    }
    if (unassigned == 0) return ClauseState::Conflict;
    if (unassigned == 1) return ClauseState::Unit;
    return ClauseState::Unresolved;
}

// Unit propagation to fixpoint. Returns false on conflict; records the
// variables it assigned so the caller can undo them.
bool propagate(const ClauseSet& c, std::vector<int>& assign,
               std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& clause : c.clauses) {
            int unit_lit;
            switch (clause_state(clause, assign, unit_lit)) {
                case ClauseState::Conflict: return false;
                case ClauseState::Unit: {
                    int v = std::abs(unit_lit);
                    assign[v] = unit_lit > 0 ? 1 : -1;
                    trail.push_back(v);
                    changed = true;
                    break;
                }
                default: break;
            }
        }
    }
    return true;
}

bool dpll(const ClauseSet& c, std::vector<int>& assign) {
    std::vector<int> trail;
    if (!propagate(c, assign, trail)) {
        for (int v : trail) assign[v] = 0;
        return false;
    }
    int branch = 0;
    for (int v = 1; v <= c.num_vars; ++v)
        if (assign[v] == 0) {
            branch = v;
            break;
        }
    if (branch == 0) return true;  // total assignment, no conflict
    for (int value : {1, -1}) {
        assign[branch] = value;
        if (dpll(c, assign)) return true;
        assign[branch] = 0;
    }
    for (int v : trail) assign[v] = 0;
    return false;
}

}  // namespace

SatResult sat_solve(const ClauseSet& c) {
    std::vector<int> assign(c.num_vars + 1, 0);
    for (const auto& clause : c.clauses)
        if (clause.empty()) return {false, {}};
    if (!dpll(c, assign)) return {false, {}};
    SatResult r;
    r.satisfiable = true;
    r.model.assign(c.num_vars + 1, false);
    for (int v = 1; v <= c.num_vars; ++v) r.model[v] = assign[v] > 0;
    return r;
}

}  // namespace afreg
