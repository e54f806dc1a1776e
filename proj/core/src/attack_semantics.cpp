#include "afreg/attack_semantics.hpp"

namespace afreg {

namespace {

void collect_k(const AttackPtr& e, const Alphabet& a,
               std::unordered_map<const AttackNode*, Dfa>& memo) {
    if (!e) return;
    if (e->k) memo.emplace(e.get(), compile_regex(e->k, a));
    collect_k(e->left, a, memo);
    collect_k(e->right, a, memo);
}

int resolve_symbol(const AttackNode& e, const Alphabet& a) {
    // Resolved by name, not by the stored index: the node may have been
    // parsed against a part alphabet and later embedded in a combined one.
    auto idx = a.index(e.symbol);
    if (!idx)
        throw Error("attack expression symbol '" + e.symbol +
                    "' is not in the alphabet");
    return *idx;
}

}  // namespace

KCache::KCache(const AttackPtr& root, const Alphabet& a) {
    collect_k(root, a, memo_);
}

const Dfa& KCache::get(const AttackNode& node) const {
    auto it = memo_.find(&node);
    if (it == memo_.end())
        throw Error("attack expression node missing from the K cache");
    return it->second;
}

Dfa eval_forward(const AttackPtr& e, const Dfa& s, const KCache& cache) {
    const Alphabet& a = s.alphabet();
    switch (e->kind) {
        case AttackKind::Sym:
            return Dfa::single_word(a, Word{resolve_symbol(*e, a)});
        case AttackKind::Identity: return s;
        case AttackKind::Union:
            return union_of(eval_forward(e->left, s, cache),
                            eval_forward(e->right, s, cache));
        case AttackKind::ConcatRight:
            return concat(eval_forward(e->left, s, cache), cache.get(*e));
        case AttackKind::ConcatLeft:
            return concat(cache.get(*e), eval_forward(e->left, s, cache));
        case AttackKind::QuotientByK:
            return quotient(eval_forward(e->left, s, cache), cache.get(*e));
        case AttackKind::KQuotientBy:
            return quotient(cache.get(*e), eval_forward(e->left, s, cache));
        case AttackKind::IntersectK:
            return intersect(eval_forward(e->left, s, cache), cache.get(*e));
        case AttackKind::Hd: return head(eval_forward(e->left, s, cache));
        case AttackKind::Tl: return tail(eval_forward(e->left, s, cache));
    }
    throw Error("corrupt attack expression node");
}

Dfa eval_inverse(const AttackPtr& e, const Dfa& s, const KCache& cache) {
    const Alphabet& a = s.alphabet();
    switch (e->kind) {
        case AttackKind::Sym: {
            // {v : sym in eval_forward(e, {v})} is all of Sigma* when the
            // symbol lies in s, and empty otherwise.
            Dfa sym = Dfa::single_word(a, Word{resolve_symbol(*e, a)});
            return concat(tail(intersect(s, sym)), Dfa::universal(a));
        }
        case AttackKind::Identity: return s;
        case AttackKind::Union:
            return union_of(eval_inverse(e->left, s, cache),
                            eval_inverse(e->right, s, cache));
        case AttackKind::ConcatRight:
            return eval_inverse(e->left, quotient(s, cache.get(*e)), cache);
        case AttackKind::ConcatLeft:
            // Strip K from the left: reverse, strip from the right,
            // reverse back.
            return eval_inverse(
                e->left,
                reverse(quotient(reverse(s), reverse(cache.get(*e)))), cache);
        case AttackKind::QuotientByK:
            return eval_inverse(e->left, concat(s, cache.get(*e)), cache);
        case AttackKind::KQuotientBy:
            return eval_inverse(
                e->left,
                reverse(quotient(reverse(cache.get(*e)), reverse(s))), cache);
        case AttackKind::IntersectK:
            return eval_inverse(e->left, intersect(s, cache.get(*e)), cache);
        case AttackKind::Hd:
            // Only the one-symbol words of s matter; each stands for
            // every word it heads.
            return eval_inverse(
                e->left,
                concat(intersect(s, Dfa::all_symbols(a)), Dfa::universal(a)),
                cache);
        case AttackKind::Tl:
            return eval_inverse(e->left, concat(Dfa::all_symbols(a), s),
                                cache);
    }
    throw Error("corrupt attack expression node");
}

Dfa eval_forward(const AttackPtr& e, const Dfa& s) {
    return eval_forward(e, s, KCache(e, s.alphabet()));
}

Dfa eval_inverse(const AttackPtr& e, const Dfa& s) {
    return eval_inverse(e, s, KCache(e, s.alphabet()));
}

}  // namespace afreg
