#ifndef AFREG_DFA_HPP
#define AFREG_DFA_HPP

#include <cstddef>
#include <vector>

#include "afreg/alphabet.hpp"

namespace afreg {

/// A complete deterministic finite automaton in canonical form: minimal
/// (Myhill-Nerode), with states renumbered by breadth-first traversal
/// from the start state in alphabet order. Two canonical Dfas over the
/// same alphabet accept the same language iff they compare equal
/// structurally, so operator== decides language equivalence.
///
/// The transition function is total; when the language needs a rejecting
/// sink it is an ordinary state. Values are immutable after construction
/// and every operation below is a pure function of its inputs.
class Dfa {
  public:
    /// Canonicalizes an arbitrary complete DFA. `transitions` is a flat
    /// row-major table: transitions[q * |Sigma| + s] = successor.
    /// Throws Error on malformed input.
    static Dfa from_parts(Alphabet alphabet, int state_count, int start,
                          std::vector<int> accepting,
                          std::vector<int> transitions);

    static Dfa empty_language(const Alphabet& a);
    static Dfa epsilon_only(const Alphabet& a);
    static Dfa single_word(const Alphabet& a, const Word& w);
    /// Sigma* (every word, including the empty one).
    static Dfa universal(const Alphabet& a);
    /// Exactly the one-symbol words.
    static Dfa all_symbols(const Alphabet& a);

    const Alphabet& alphabet() const { return alphabet_; }
    int state_count() const { return state_count_; }
    int start() const { return 0; }  // BFS renumbering pins the start at 0
    bool is_accepting(int q) const { return accepting_[q]; }
    int next(int q, int sym) const {
        return transitions_[static_cast<std::size_t>(q) * alphabet_.size() + sym];
    }
    std::vector<int> accepting_states() const;
    const std::vector<int>& transition_table() const { return transitions_; }

    bool contains(const Word& w) const;
    bool empty() const;
    /// True iff the accepted language is a finite set of words.
    bool finite_language() const;

    /// Words of the language in length-lex order (length first, ties by
    /// symbol order), truncated by both bounds. Deterministic.
    std::vector<Word> enumerate(std::size_t max_count,
                                std::size_t max_len) const;
    /// All accepted words of exactly the given length, in symbol order.
    std::vector<Word> words_of_length(std::size_t len) const;

    /// Structural equality; on canonical automata this is language
    /// equality over the same alphabet.
    bool operator==(const Dfa& other) const;
    bool operator!=(const Dfa& other) const { return !(*this == other); }

  private:
    Dfa(Alphabet alphabet, int state_count, std::vector<bool> accepting,
        std::vector<int> transitions)
        : alphabet_(std::move(alphabet)),
          state_count_(state_count),
          accepting_(std::move(accepting)),
          transitions_(std::move(transitions)) {}

    Alphabet alphabet_;
    int state_count_;
    std::vector<bool> accepting_;  // indexed by state
    std::vector<int> transitions_; // row-major, total

    friend class Nfa;
    friend Dfa minimize_from(const Dfa&, int);
};

// Boolean closure (product / complement constructions). Binary forms
// throw AlphabetMismatch when operand alphabets differ. All results are
// canonical.
Dfa union_of(const Dfa& d1, const Dfa& d2);
Dfa intersect(const Dfa& d1, const Dfa& d2);
Dfa difference(const Dfa& d1, const Dfa& d2);
Dfa complement(const Dfa& d);

// Concatenative closure, via epsilon-NFA constructions.
Dfa concat(const Dfa& d1, const Dfa& d2);
Dfa star(const Dfa& d);
Dfa reverse(const Dfa& d);

/// Right quotient: { u : exists v in L(d2) with u.v in L(d1) }.
Dfa quotient(const Dfa& d1, const Dfa& d2);

/// First symbols: { s : exists w with s.w in L(d) }. The empty word
/// contributes nothing. Returned as ascending symbol indexes.
std::vector<int> head_symbols(const Dfa& d);
/// The same symbol set as a one-symbol-word language.
Dfa head(const Dfa& d);
/// First-symbol-stripped language: { w : exists s with s.w in L(d) }.
Dfa tail(const Dfa& d);

bool is_subset(const Dfa& d1, const Dfa& d2);
bool equivalent(const Dfa& d1, const Dfa& d2);

/// Re-canonicalizes (idempotent on canonical inputs).
Dfa minimize(const Dfa& d);

}  // namespace afreg

#endif
