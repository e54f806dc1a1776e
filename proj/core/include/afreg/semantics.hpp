#ifndef AFREG_SEMANTICS_HPP
#define AFREG_SEMANTICS_HPP

#include "afreg/af_spec.hpp"
#include "afreg/sat.hpp"

namespace afreg {

/// Every predicate below requires L(s) to be a subset of the argument
/// language (PreconditionError otherwise) and decides the property
/// exactly via regular-language computations.

/// s contains none of its own attackers.
bool is_conflict_free(const AfSpec& spec, const Dfa& s);

/// Every attacker of x is attacked by s. Requires x to be an argument.
bool is_acceptable(const AfSpec& spec, const Word& x, const Dfa& s);

/// Conflict-free and s defends each of its members.
bool is_admissible(const AfSpec& spec, const Dfa& s);

/// Conflict-free and s together with the arguments it attacks covers
/// the whole argument language.
bool is_stable(const AfSpec& spec, const Dfa& s);

/// F(s): the arguments whose attackers are all attacked by s.
Dfa characteristic(const AfSpec& spec, const Dfa& s);

/// Conflict-free fixpoint of the characteristic function.
bool is_complete(const AfSpec& spec, const Dfa& s);

struct GroundedResult {
    enum class Status { Completed, Exhausted } status;
    /// The grounded extension if Completed; the part accumulated so far
    /// if Exhausted.
    Dfa extension;
    /// Number of executed loop iterations.
    int iterations;
};

/// Least-fixpoint iteration: strip the unattacked layer, discard what
/// it attacks, repeat. Terminates with Completed when a layer is empty;
/// gives up with Exhausted (a result, not an error) after max_iter
/// loop iterations.
GroundedResult grounded(const AfSpec& spec, int max_iter);

enum class FinitaryStatus { Guaranteed, Unknown };

/// Guaranteed when no constant-regex operand of the attack expression
/// uses a star: then every argument provably has finitely many
/// attackers. Unknown otherwise — the condition is sufficient, not
/// necessary.
FinitaryStatus finitary_syntactic(const AfSpec& spec);

struct AttackerList {
    enum class Status { Finite, NonFinitary, CapExceeded } status;
    /// Length-lex list of attackers; filled only when Finite.
    std::vector<Word> words;
};

/// The attackers of one argument, enumerated when their language is
/// finite and within cap.
AttackerList attackers_of_word(const AfSpec& spec, const Word& w,
                               std::size_t cap = 10000);

struct SemiDecisionResult {
    enum class Status { Proven, Unknown } status;
    /// Index of the enumerated word at which unsatisfiability was found
    /// (Proven; 0 = at initialization), or the budget consumed (Unknown).
    int witness_k;
};

/// Semi-decides "no stable extension exists": enumerates arguments in
/// length-lex order, accumulating conflict clauses (no argument together
/// with an attacker) and range clauses (every argument in or attacked);
/// Proven as soon as the clause set is unsatisfiable. Requires a finite
/// attacker set for every enumerated argument (PreconditionError on a
/// non-finitary argument; Error past cap).
SemiDecisionResult stable_empty_semidecide(const AfSpec& spec, int budget,
                                           std::size_t cap = 10000);

/// Semi-decides "no argument of r is in any admissible set": conflict
/// and defense clauses over the growing enumeration, plus one clause
/// requiring some member of r. Same finitary requirements.
SemiDecisionResult no_credulous_admissible(const AfSpec& spec,
                                           const std::vector<Word>& r,
                                           int budget,
                                           std::size_t cap = 10000);

}  // namespace afreg

#endif
