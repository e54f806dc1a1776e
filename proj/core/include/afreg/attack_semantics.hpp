#ifndef AFREG_ATTACK_SEMANTICS_HPP
#define AFREG_ATTACK_SEMANTICS_HPP

#include <unordered_map>

#include "afreg/attack_expr.hpp"

namespace afreg {

/// Write-once memo of the compiled K operands of one attack expression.
/// Built eagerly at load time; read-only afterwards, so concurrent
/// queries may share it.
class KCache {
  public:
    KCache(const AttackPtr& root, const Alphabet& a);

    /// The compiled automaton of `node`'s K operand.
    const Dfa& get(const AttackNode& node) const;

  private:
    std::unordered_map<const AttackNode*, Dfa> memo_;
};

/// The set denoted by `e` when the identity stands for L(s): the
/// attackers of s before restriction to any argument language.
/// Structural recursion; every intermediate result is canonical.
Dfa eval_forward(const AttackPtr& e, const Dfa& s, const KCache& cache);

/// The inverse image: { v : L(s) meets eval_forward(e, {v}) }, i.e. the
/// words attacked by s before restriction. Computed by direct recursion
/// (quotients, concatenations and reversals applied to s), not by
/// materializing a transformed expression.
Dfa eval_inverse(const AttackPtr& e, const Dfa& s, const KCache& cache);

/// Convenience overloads that compile the K operands on the fly.
Dfa eval_forward(const AttackPtr& e, const Dfa& s);
Dfa eval_inverse(const AttackPtr& e, const Dfa& s);

}  // namespace afreg

#endif
