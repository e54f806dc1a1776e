#ifndef AFREG_SAT_HPP
#define AFREG_SAT_HPP

#include <vector>

namespace afreg {

/// A CNF formula. Variables are dense positive integers starting at 1;
/// a literal is +v or -v.
struct ClauseSet {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    int new_var() { return ++num_vars; }
    void add_clause(std::vector<int> lits) {
        clauses.push_back(std::move(lits));
    }
};

struct SatResult {
    bool satisfiable;
    /// model[v] for v in 1..num_vars; meaningful only when satisfiable.
    std::vector<bool> model;
};

/// Complete and deterministic: unit propagation to fixpoint, branch on
/// the lowest unassigned variable trying true first, chronological
/// backtracking.
SatResult sat_solve(const ClauseSet& c);

}  // namespace afreg

#endif
