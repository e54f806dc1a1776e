#include "afreg/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>

#include "nfa.hpp"

namespace afreg {

namespace {

std::vector<bool> reachable_states(int n, int k, int start,
                                   const std::vector<int>& trans) {
    std::vector<bool> seen(n, false);
    std::deque<int> todo{start};
    seen[start] = true;
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (int s = 0; s < k; ++s) {
            int t = trans[static_cast<std::size_t>(q) * k + s];
            if (!seen[t]) {
                seen[t] = true;
                todo.push_back(t);
            }
        }
    }
    return seen;
}

// States from which some accepting state is reachable.
std::vector<bool> live_states(int n, int k, const std::vector<bool>& accepting,
                              const std::vector<int>& trans) {
    std::vector<std::vector<int>> preds(n);
    for (int q = 0; q < n; ++q)
        for (int s = 0; s < k; ++s)
            preds[trans[static_cast<std::size_t>(q) * k + s]].push_back(q);
    std::vector<bool> live(n, false);
    std::deque<int> todo;
    for (int q = 0; q < n; ++q)
        if (accepting[q]) {
            live[q] = true;
            todo.push_back(q);
        }
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (int p : preds[q])
            if (!live[p]) {
                live[p] = true;
                todo.push_back(p);
            }
    }
    return live;
}

}  // namespace

// Canonicalization: trim to states reachable from `start`, Moore
// partition refinement, then BFS renumbering in alphabet order.
Dfa minimize_from(const Dfa& d, int start);

Dfa Dfa::from_parts(Alphabet alphabet, int state_count, int start,
                    std::vector<int> accepting, std::vector<int> transitions) {
    const int k = alphabet.size();
    if (state_count <= 0) throw Error("dfa needs at least one state");
    if (start < 0 || start >= state_count) throw Error("dfa start out of range");
    if (static_cast<int>(transitions.size()) != state_count * k)
        throw Error("dfa transition table has wrong size");
    for (int t : transitions)
        if (t < 0 || t >= state_count) throw Error("dfa transition out of range");
    std::vector<bool> acc(state_count, false);
    for (int a : accepting) {
        if (a < 0 || a >= state_count) throw Error("dfa accepting state out of range");
        acc[a] = true;
    }
    Dfa raw(std::move(alphabet), state_count, std::move(acc), std::move(transitions));
    // from_parts may receive a non-zero start; minimize() renumbers from it.
    return minimize_from(raw, start);
}

Dfa minimize_from(const Dfa& d, int start) {
    const int k = d.alphabet().size();
    const int n = d.state_count();
    const std::vector<int>& trans = d.transition_table();

    std::vector<bool> reach = reachable_states(n, k, start, trans);
    std::vector<int> pack(n, -1);
    std::vector<int> states;
    for (int q = 0; q < n; ++q)
        if (reach[q]) {
            pack[q] = static_cast<int>(states.size());
            states.push_back(q);
        }
    const int m = static_cast<int>(states.size());

    // Moore refinement over the reachable part.
    std::vector<int> cls(m);
    for (int i = 0; i < m; ++i) cls[i] = d.is_accepting(states[i]) ? 1 : 0;
    int num_classes = 2;
    // All-accepting or all-rejecting collapses to one class.
    {
        bool any0 = false, any1 = false;
        for (int c : cls) (c ? any1 : any0) = true;
        if (!any0 || !any1) {
            std::fill(cls.begin(), cls.end(), 0);
            num_classes = 1;
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(m);
        for (int i = 0; i < m; ++i) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(cls[i]);
            for (int s = 0; s < k; ++s)
                sig.push_back(cls[pack[trans[static_cast<std::size_t>(states[i]) * k + s]]]);
            auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            (void)fresh;
            next_cls[i] = it->second;
        }
        int count = static_cast<int>(sig_ids.size());
        cls.swap(next_cls);
        if (count == num_classes) break;
        num_classes = count;
    }

    // Quotient transitions on classes.
    std::vector<int> cls_trans(static_cast<std::size_t>(num_classes) * k, -1);
    std::vector<bool> cls_acc(num_classes, false);
    for (int i = 0; i < m; ++i) {
        if (d.is_accepting(states[i])) cls_acc[cls[i]] = true;
        for (int s = 0; s < k; ++s)
            cls_trans[static_cast<std::size_t>(cls[i]) * k + s] =
                cls[pack[trans[static_cast<std::size_t>(states[i]) * k + s]]];
    }
    int start_cls = cls[pack[start]];

    // BFS renumber from the start class, exploring symbols in order.
    std::vector<int> renum(num_classes, -1);
    std::vector<int> order;
    renum[start_cls] = 0;
    order.push_back(start_cls);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int c = order[i];
        for (int s = 0; s < k; ++s) {
            int t = cls_trans[static_cast<std::size_t>(c) * k + s];
            if (renum[t] < 0) {
                renum[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }

    std::vector<bool> acc(num_classes, false);
    std::vector<int> tt(static_cast<std::size_t>(num_classes) * k);
    for (int c = 0; c < num_classes; ++c) {
        int nc = renum[c];
        acc[nc] = cls_acc[c];
        for (int s = 0; s < k; ++s)
            tt[static_cast<std::size_t>(nc) * k + s] =
                renum[cls_trans[static_cast<std::size_t>(c) * k + s]];
    }
    return Dfa(d.alphabet(), num_classes, std::move(acc), std::move(tt));
}

Dfa minimize(const Dfa& d) { return minimize_from(d, d.start()); }

Dfa Dfa::empty_language(const Alphabet& a) {
    const int k = a.size();
    return from_parts(a, 1, 0, {}, std::vector<int>(k, 0));
}

Dfa Dfa::epsilon_only(const Alphabet& a) {
    return single_word(a, Word{});
}

Dfa Dfa::single_word(const Alphabet& a, const Word& w) {
    const int k = a.size();
    const int n = static_cast<int>(w.size()) + 2;  // chain + dead sink
    const int dead = n - 1;
    std::vector<int> tt(static_cast<std::size_t>(n) * k, dead);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] < 0 || w[i] >= k) throw Error("word symbol out of range");
        tt[static_cast<std::size_t>(i) * k + w[i]] = i + 1;
    }
    return from_parts(a, n, 0, {static_cast<int>(w.size())}, std::move(tt));
}

Dfa Dfa::universal(const Alphabet& a) {
    const int k = a.size();
    return from_parts(a, 1, 0, {0}, std::vector<int>(k, 0));
}

Dfa Dfa::all_symbols(const Alphabet& a) {
    const int k = a.size();
    std::vector<int> tt(static_cast<std::size_t>(3) * k);
    for (int s = 0; s < k; ++s) {
        tt[0 * k + s] = 1;
        tt[1 * k + s] = 2;
        tt[2 * k + s] = 2;
    }
    return from_parts(a, 3, 0, {1}, std::move(tt));
}

std::vector<int> Dfa::accepting_states() const {
    std::vector<int> out;
    for (int q = 0; q < state_count_; ++q)
        if (accepting_[q]) out.push_back(q);
    return out;
}

bool Dfa::contains(const Word& w) const {
    int q = start();
    for (int s : w) q = next(q, s);
    return accepting_[q];
}

bool Dfa::empty() const {
    // Canonical form keeps only reachable states.
    return std::none_of(accepting_.begin(), accepting_.end(),
                        [](bool b) { return b; });
}

bool Dfa::finite_language() const {
    const int k = alphabet_.size();
    std::vector<bool> live = live_states(state_count_, k, accepting_, transitions_);
    // In canonical form all states are reachable; a cycle among live
    // states pumps arbitrarily long accepted words.
    std::vector<int> color(state_count_, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int root = 0; root < state_count_; ++root) {
        if (!live[root] || color[root] != 0) continue;
        stack.push_back({root, 0});
        color[root] = 1;
        while (!stack.empty()) {
            auto& [q, s] = stack.back();
            if (s == k) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int t = next(q, s++);
            if (!live[t]) continue;
            if (color[t] == 1) return false;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return true;
}

std::vector<Word> Dfa::words_of_length(std::size_t len) const {
    const int k = alphabet_.size();
    // can[r][q]: an accepting state is reachable from q in exactly r steps.
    std::vector<std::vector<bool>> can(len + 1,
                                       std::vector<bool>(state_count_, false));
    for (int q = 0; q < state_count_; ++q) can[0][q] = accepting_[q];
    for (std::size_t r = 1; r <= len; ++r)
        for (int q = 0; q < state_count_; ++q)
            for (int s = 0; s < k && !can[r][q]; ++s)
                if (can[r - 1][next(q, s)]) can[r][q] = true;

    std::vector<Word> out;
    Word w;
    // Iterative DFS in symbol order over viable prefixes.
    struct Frame { int state; int sym; };
    std::vector<Frame> stack;
    if (!can[len][start()]) return out;
    stack.push_back({start(), 0});
    while (!stack.empty()) {
        if (w.size() == len) {
            out.push_back(w);
            stack.pop_back();
            if (!w.empty()) w.pop_back();
            continue;
        }
        auto& fr = stack.back();
        bool advanced = false;
        while (fr.sym < k) {
            int s = fr.sym++;
            int t = next(fr.state, s);
            if (can[len - w.size() - 1][t]) {
                w.push_back(s);
                stack.push_back({t, 0});
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            stack.pop_back();
            if (!w.empty()) w.pop_back();
        }
    }
    return out;
}

std::vector<Word> Dfa::enumerate(std::size_t max_count,
                                 std::size_t max_len) const {
    std::vector<Word> out;
    if (max_count == 0) return out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (auto& w : words_of_length(len)) {
            out.push_back(std::move(w));
            if (out.size() == max_count) return out;
        }
        // No accepted word of any greater length: all words of a finite
        // language fit below the state count.
        if (len >= static_cast<std::size_t>(state_count_) && finite_language())
            break;
    }
    return out;
}

bool Dfa::operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && state_count_ == other.state_count_ &&
           accepting_ == other.accepting_ && transitions_ == other.transitions_;
}

// ---- products -----------------------------------------------------------

Dfa product(const Dfa& d1, const Dfa& d2, bool (*op)(bool, bool)) {
    if (d1.alphabet() != d2.alphabet()) throw AlphabetMismatch();
    const int k = d1.alphabet().size();
    const int n2 = d2.state_count();
    const int n = d1.state_count() * n2;
    std::vector<int> tt(static_cast<std::size_t>(n) * k);
    std::vector<int> acc;
    for (int q1 = 0; q1 < d1.state_count(); ++q1)
        for (int q2 = 0; q2 < n2; ++q2) {
            int q = q1 * n2 + q2;
            if (op(d1.is_accepting(q1), d2.is_accepting(q2))) acc.push_back(q);
            for (int s = 0; s < k; ++s)
                tt[static_cast<std::size_t>(q) * k + s] =
                    d1.next(q1, s) * n2 + d2.next(q2, s);
        }
    return Dfa::from_parts(d1.alphabet(), n, d1.start() * n2 + d2.start(),
                           std::move(acc), std::move(tt));
}

Dfa union_of(const Dfa& d1, const Dfa& d2) {
    return product(d1, d2, [](bool a, bool b) { return a || b; });
}

Dfa intersect(const Dfa& d1, const Dfa& d2) {
    return product(d1, d2, [](bool a, bool b) { return a && b; });
}

Dfa difference(const Dfa& d1, const Dfa& d2) {
    return product(d1, d2, [](bool a, bool b) { return a && !b; });
}

Dfa complement(const Dfa& d) {
    std::vector<int> acc;
    for (int q = 0; q < d.state_count(); ++q)
        if (!d.is_accepting(q)) acc.push_back(q);
    return Dfa::from_parts(d.alphabet(), d.state_count(), d.start(),
                           std::move(acc), std::vector<int>(d.transition_table()));
}

// ---- epsilon-NFA constructions ------------------------------------------

int Nfa::embed(const Dfa& d) {
    const int k = alphabet_.size();
    const int offset = static_cast<int>(accepting_.size());
    for (int q = 0; q < d.state_count(); ++q) add_state();
    for (int q = 0; q < d.state_count(); ++q) {
        if (d.is_accepting(q)) accepting_[offset + q] = true;
        for (int s = 0; s < k; ++s)
            add_edge(offset + q, s, offset + d.next(q, s));
    }
    return offset;
}

std::set<int> Nfa::epsilon_closure(const std::set<int>& states) const {
    std::set<int> out = states;
    std::deque<int> todo(states.begin(), states.end());
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (int t : epsilon_edges_[q])
            if (out.insert(t).second) todo.push_back(t);
    }
    return out;
}

Dfa Nfa::determinize() const {
    const int k = alphabet_.size();
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> subsets;
    std::vector<int> tt;
    std::vector<int> acc;

    auto intern = [&](std::set<int> s) {
        auto [it, fresh] = ids.emplace(std::move(s), static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(it->first);
            tt.resize(subsets.size() * k, -1);
        }
        return it->second;
    };

    int start_id = intern(epsilon_closure(std::set<int>(starts_.begin(), starts_.end())));
    for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
        std::set<int> subset = subsets[q];  // copy: subsets may reallocate
        for (int s = 0; s < k; ++s) {
            std::set<int> moved;
            for (int p : subset)
                for (int t : symbol_edges_[p][s]) moved.insert(t);
            tt[static_cast<std::size_t>(q) * k + s] = intern(epsilon_closure(moved));
        }
    }
    for (int q = 0; q < static_cast<int>(subsets.size()); ++q)
        for (int p : subsets[q])
            if (accepting_[p]) {
                acc.push_back(q);
                break;
            }
    return Dfa::from_parts(alphabet_, static_cast<int>(subsets.size()), start_id,
                           std::move(acc), std::move(tt));
}

Dfa concat(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet() != d2.alphabet()) throw AlphabetMismatch();
    const int k = d1.alphabet().size();
    Nfa out(d1.alphabet());
    // d1 is copied by hand rather than embed()ed so its accepting marks
    // are dropped: only d2's accepting states count in the result.
    for (int q = 0; q < d1.state_count(); ++q) out.add_state();
    for (int q = 0; q < d1.state_count(); ++q)
        for (int s = 0; s < k; ++s)
            out.add_edge(q, s, d1.next(q, s));
    int base2 = out.embed(d2);
    for (int q = 0; q < d1.state_count(); ++q)
        if (d1.is_accepting(q)) out.add_epsilon(q, base2 + d2.start());
    out.set_start(d1.start());
    return out.determinize();
}

Dfa star(const Dfa& d) {
    Nfa n(d.alphabet());
    int hub = n.add_state();
    n.set_start(hub);
    n.set_accepting(hub);
    int off = n.embed(d);
    n.add_epsilon(hub, off + d.start());
    for (int q = 0; q < d.state_count(); ++q)
        if (d.is_accepting(q)) n.add_epsilon(off + q, hub);
    // d's accepting marks stay set, which is harmless: every accepting
    // state has an epsilon edge to the accepting hub.
    return n.determinize();
}

Dfa reverse(const Dfa& d) {
    const int k = d.alphabet().size();
    Nfa n(d.alphabet());
    for (int q = 0; q < d.state_count(); ++q) n.add_state();
    for (int q = 0; q < d.state_count(); ++q)
        for (int s = 0; s < k; ++s)
            n.add_edge(d.next(q, s), s, q);
    for (int q = 0; q < d.state_count(); ++q)
        if (d.is_accepting(q)) n.set_start(q);
    n.set_accepting(d.start());
    return n.determinize();
}

Dfa quotient(const Dfa& d1, const Dfa& d2) {
    if (d1.alphabet() != d2.alphabet()) throw AlphabetMismatch();
    const int k = d1.alphabet().size();
    const int n2 = d2.state_count();
    const int n = d1.state_count() * n2;
    // Pair (q1, q2) is "productive" if some common suffix leads q1 to an
    // accepting d1 state and q2 to an accepting d2 state.
    std::vector<std::vector<int>> preds(n);
    std::vector<bool> prod(n, false);
    std::deque<int> todo;
    for (int q1 = 0; q1 < d1.state_count(); ++q1)
        for (int q2 = 0; q2 < n2; ++q2) {
            int q = q1 * n2 + q2;
            for (int s = 0; s < k; ++s)
                preds[d1.next(q1, s) * n2 + d2.next(q2, s)].push_back(q);
            if (d1.is_accepting(q1) && d2.is_accepting(q2)) {
                prod[q] = true;
                todo.push_back(q);
            }
        }
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (int p : preds[q])
            if (!prod[p]) {
                prod[p] = true;
                todo.push_back(p);
            }
    }
    std::vector<int> acc;
    for (int q1 = 0; q1 < d1.state_count(); ++q1)
        if (prod[q1 * n2 + d2.start()]) acc.push_back(q1);
    return Dfa::from_parts(d1.alphabet(), d1.state_count(), d1.start(), std::move(acc),
                           std::vector<int>(d1.transition_table()));
}

std::vector<int> head_symbols(const Dfa& d) {
    const int k = d.alphabet().size();
    std::vector<bool> acc(d.state_count());
    for (int q = 0; q < d.state_count(); ++q) acc[q] = d.is_accepting(q);
    std::vector<bool> live =
        live_states(d.state_count(), k, acc, d.transition_table());
    std::vector<int> out;
    for (int s = 0; s < k; ++s)
        if (live[d.next(d.start(), s)]) out.push_back(s);
    return out;
}

Dfa head(const Dfa& d) {
    Dfa result = Dfa::empty_language(d.alphabet());
    for (int s : head_symbols(d))
        result = union_of(result, Dfa::single_word(d.alphabet(), Word{s}));
    return result;
}

Dfa tail(const Dfa& d) {
    const int k = d.alphabet().size();
    Nfa n(d.alphabet());
    int off = n.embed(d);
    int start = n.add_state();
    n.set_start(start);
    for (int s = 0; s < k; ++s)
        n.add_epsilon(start, off + d.next(d.start(), s));
    return n.determinize();
}

bool is_subset(const Dfa& d1, const Dfa& d2) {
    return difference(d1, d2).empty();
}

bool equivalent(const Dfa& d1, const Dfa& d2) { return d1 == d2; }

}  // namespace afreg
