// Shared utilities for the test suites: deterministic random instance
// generators and brute-force reference implementations that are kept
// deliberately independent of the library's automata kernel.
#ifndef AFREG_TESTS_HELPERS_HPP
#define AFREG_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "afreg/attack_expr.hpp"
#include "afreg/dfa.hpp"

namespace testutil {

using afreg::Alphabet;
using afreg::AttackKind;
using afreg::AttackNode;
using afreg::AttackPtr;
using afreg::Dfa;
using afreg::RegexKind;
using afreg::RegexNode;
using afreg::RegexPtr;
using afreg::Word;

inline Alphabet make_alphabet(int n) {
    static const std::vector<std::string> pool = {"a", "b", "c", "d"};
    return Alphabet(std::vector<std::string>(pool.begin(), pool.begin() + n));
}

/// A DFA kept as raw parts so membership can be decided by plain table
/// walking, independent of the library's canonicalization.
struct RawDfa {
    int sigma = 0;
    int states = 0;
    int start = 0;
    std::vector<bool> accepting;
    std::vector<int> transitions;  // row-major, total

    bool accepts(const Word& w) const {
        int q = start;
        for (int s : w) q = transitions[static_cast<std::size_t>(q) * sigma + s];
        return accepting[q];
    }
};

inline RawDfa random_raw_dfa(std::mt19937& rng, int sigma, int max_states) {
    RawDfa d;
    d.sigma = sigma;
    d.states = std::uniform_int_distribution<int>(1, max_states)(rng);
    d.start = std::uniform_int_distribution<int>(0, d.states - 1)(rng);
    std::uniform_int_distribution<int> state(0, d.states - 1);
    std::bernoulli_distribution acc(0.4);
    d.accepting.resize(d.states);
    for (int q = 0; q < d.states; ++q) d.accepting[q] = acc(rng);
    d.transitions.resize(static_cast<std::size_t>(d.states) * sigma);
    for (auto& t : d.transitions) t = state(rng);
    return d;
}

inline Dfa canonical_of(const RawDfa& d, const Alphabet& a) {
    std::vector<int> acc;
    for (int q = 0; q < d.states; ++q)
        if (d.accepting[q]) acc.push_back(q);
    return Dfa::from_parts(a, d.states, d.start, acc, d.transitions);
}

/// Every word over `sigma` symbols up to the given length, in
/// length-lex order.
inline std::vector<Word> all_words(int sigma, int max_len) {
    std::vector<Word> out = {{}};
    std::size_t lo = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t hi = out.size();
        for (std::size_t i = lo; i < hi; ++i)
            for (int s = 0; s < sigma; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        lo = hi;
    }
    return out;
}

/// good[q] answers: starting d1 in state q and d2 at its start, is
/// there a common suffix v accepted by d2 that drives d1 into
/// acceptance? Then u is in L1/L2 iff good[delta1(start1, u)]. A
/// witness shorter than |Q1|*|Q2| always exists, so the bounded
/// iteration is exact.
inline std::vector<bool> quotient_good_states(const RawDfa& d1,
                                              const RawDfa& d2) {
    auto at = [&](int q1, int q2) {
        return static_cast<std::size_t>(q1) * d2.states + q2;
    };
    std::vector<bool> pair_ok(
        static_cast<std::size_t>(d1.states) * d2.states, false);
    for (int q1 = 0; q1 < d1.states; ++q1)
        for (int q2 = 0; q2 < d2.states; ++q2)
            pair_ok[at(q1, q2)] = d1.accepting[q1] && d2.accepting[q2];
    for (int round = 0; round < d1.states * d2.states; ++round)
        for (int q1 = 0; q1 < d1.states; ++q1)
            for (int q2 = 0; q2 < d2.states; ++q2)
                for (int s = 0; s < d1.sigma && !pair_ok[at(q1, q2)]; ++s) {
                    int n1 = d1.transitions[static_cast<std::size_t>(q1) * d1.sigma + s];
                    int n2 = d2.transitions[static_cast<std::size_t>(q2) * d2.sigma + s];
                    if (pair_ok[at(n1, n2)]) pair_ok[at(q1, q2)] = true;
                }
    std::vector<bool> good(d1.states);
    for (int q1 = 0; q1 < d1.states; ++q1)
        good[q1] = pair_ok[at(q1, d2.start)];
    return good;
}

inline int raw_state_after(const RawDfa& d, const Word& w) {
    int q = d.start;
    for (int s : w)
        q = d.transitions[static_cast<std::size_t>(q) * d.sigma + s];
    return q;
}

// ---------------------------------------------------------------------
// Random syntax trees.

inline RegexPtr random_regex(std::mt19937& rng, const Alphabet& a, int depth,
                             bool star_free) {
    std::uniform_int_distribution<int> sym(0, a.size() - 1);
    int top = star_free ? 4 : 5;
    int kind = depth <= 0 ? std::uniform_int_distribution<int>(0, 2)(rng)
                          : std::uniform_int_distribution<int>(0, top)(rng);
    switch (kind) {
        case 0: return RegexNode::make_empty();
        case 1: return RegexNode::make_epsilon();
        case 2: {
            int s = sym(rng);
            return RegexNode::make_symbol(a.name(s), s);
        }
        case 3:
            return RegexNode::make_union(
                random_regex(rng, a, depth - 1, star_free),
                random_regex(rng, a, depth - 1, star_free));
        case 4:
            return RegexNode::make_concat(
                random_regex(rng, a, depth - 1, star_free),
                random_regex(rng, a, depth - 1, star_free));
        default:
            return RegexNode::make_star(
                random_regex(rng, a, depth - 1, star_free));
    }
}

/// Random attack expression with roughly `size` operator nodes. When
/// `star_free_k` is set, every K operand denotes a finite language so
/// brute-force evaluation stays exact.
inline AttackPtr random_attack(std::mt19937& rng, const Alphabet& a, int size,
                               bool star_free_k) {
    std::uniform_int_distribution<int> sym(0, a.size() - 1);
    auto leaf = [&]() -> AttackPtr {
        if (std::bernoulli_distribution(0.5)(rng)) {
            int s = sym(rng);
            return AttackNode::make_sym(a.name(s), s);
        }
        return AttackNode::make_identity();
    };
    if (size <= 0) return leaf();
    auto k = [&] { return random_regex(rng, a, 2, star_free_k); };
    switch (std::uniform_int_distribution<int>(0, 8)(rng)) {
        case 0: {
            int l = std::uniform_int_distribution<int>(0, size - 1)(rng);
            return AttackNode::make_union(
                random_attack(rng, a, l, star_free_k),
                random_attack(rng, a, size - 1 - l, star_free_k));
        }
        case 1:
            return AttackNode::make_concat_right(
                random_attack(rng, a, size - 1, star_free_k), k());
        case 2:
            return AttackNode::make_concat_left(
                k(), random_attack(rng, a, size - 1, star_free_k));
        case 3:
            return AttackNode::make_quotient_by_k(
                random_attack(rng, a, size - 1, star_free_k), k());
        case 4:
            return AttackNode::make_k_quotient_by(
                k(), random_attack(rng, a, size - 1, star_free_k));
        case 5:
            return AttackNode::make_intersect_k(
                random_attack(rng, a, size - 1, star_free_k), k());
        case 6:
            return AttackNode::make_hd(
                random_attack(rng, a, size - 1, star_free_k));
        default:
            return AttackNode::make_tl(
                random_attack(rng, a, size - 1, star_free_k));
    }
}

// ---------------------------------------------------------------------
// Brute-force set semantics (valid when every K operand is finite).

using WordSet = std::set<Word>;

inline WordSet finite_language_of(const Dfa& d) {
    WordSet out;
    for (auto& w : d.enumerate(1000000, 64)) out.insert(w);
    return out;
}

inline WordSet concat_sets(const WordSet& x, const WordSet& y) {
    WordSet out;
    for (const auto& u : x)
        for (const auto& v : y) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.insert(std::move(w));
        }
    return out;
}

/// { u : u.v in x for some v in k }.
inline WordSet quotient_sets(const WordSet& x, const WordSet& k) {
    WordSet out;
    for (const auto& w : x)
        for (const auto& v : k) {
            if (v.size() > w.size()) continue;
            if (std::equal(v.rbegin(), v.rend(), w.rbegin()))
                out.insert(Word(w.begin(), w.end() - v.size()));
        }
    return out;
}

/// Reference forward evaluation by exhaustive set manipulation. Only
/// sound when every K operand is a finite language (star-free K).
inline WordSet brute_forward(const AttackPtr& e, const WordSet& s,
                             const Alphabet& a) {
    switch (e->kind) {
        case AttackKind::Sym:
            return {Word{e->symbol_index}};
        case AttackKind::Identity:
            return s;
        case AttackKind::Union: {
            WordSet out = brute_forward(e->left, s, a);
            for (auto& w : brute_forward(e->right, s, a)) out.insert(w);
            return out;
        }
        case AttackKind::ConcatRight:
            return concat_sets(brute_forward(e->left, s, a),
                               finite_language_of(compile_regex(e->k, a)));
        case AttackKind::ConcatLeft:
            return concat_sets(finite_language_of(compile_regex(e->k, a)),
                               brute_forward(e->left, s, a));
        case AttackKind::QuotientByK:
            return quotient_sets(brute_forward(e->left, s, a),
                                 finite_language_of(compile_regex(e->k, a)));
        case AttackKind::KQuotientBy:
            return quotient_sets(finite_language_of(compile_regex(e->k, a)),
                                 brute_forward(e->left, s, a));
        case AttackKind::IntersectK: {
            WordSet out;
            Dfa kd = compile_regex(e->k, a);
            for (auto& w : brute_forward(e->left, s, a))
                if (kd.contains(w)) out.insert(w);
            return out;
        }
        case AttackKind::Hd: {
            WordSet out;
            for (auto& w : brute_forward(e->left, s, a))
                if (!w.empty()) out.insert(Word{w.front()});
            return out;
        }
        case AttackKind::Tl: {
            WordSet out;
            for (auto& w : brute_forward(e->left, s, a))
                if (!w.empty()) out.insert(Word(w.begin() + 1, w.end()));
            return out;
        }
    }
    return {};
}

/// Canonical automaton of a finite word set.
inline Dfa dfa_of_set(const WordSet& s, const Alphabet& a) {
    Dfa out = Dfa::empty_language(a);
    for (const auto& w : s) out = union_of(out, Dfa::single_word(a, w));
    return out;
}

}  // namespace testutil

#endif
