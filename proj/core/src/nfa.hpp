#ifndef AFREG_SRC_NFA_HPP
#define AFREG_SRC_NFA_HPP

#include <set>
#include <vector>

#include "afreg/dfa.hpp"

namespace afreg {

/// Internal construction type for the concatenative operations. Every
/// Nfa is determinized (and the result canonicalized) before it leaves
/// this module.
class Nfa {
  public:
    explicit Nfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    int add_state() {
        symbol_edges_.emplace_back(alphabet_.size());
        epsilon_edges_.emplace_back();
        accepting_.push_back(false);
        return static_cast<int>(accepting_.size()) - 1;
    }

    void add_edge(int from, int sym, int to) {
        symbol_edges_[from][sym].push_back(to);
    }
    void add_epsilon(int from, int to) { epsilon_edges_[from].push_back(to); }
    void set_start(int q) { starts_.push_back(q); }
    void set_accepting(int q) { accepting_[q] = true; }

    /// Copies every state and edge of `d`, returning the index offset of
    /// the embedded copy (state q of d becomes state offset + q).
    int embed(const Dfa& d);

    /// Subset construction with reachable-state pruning, followed by
    /// canonical minimization. Worst case exponential in the number of
    /// Nfa states; accepted at this scale.
    Dfa determinize() const;

    const Alphabet& alphabet() const { return alphabet_; }

  private:
    std::set<int> epsilon_closure(const std::set<int>& states) const;

    Alphabet alphabet_;
    std::vector<std::vector<std::vector<int>>> symbol_edges_;  // [q][sym]
    std::vector<std::vector<int>> epsilon_edges_;
    std::vector<bool> accepting_;
    std::vector<int> starts_;
};

}  // namespace afreg

#endif
