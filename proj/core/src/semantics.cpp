#include "afreg/semantics.hpp"

#include <map>
#include <optional>

namespace afreg {

bool is_conflict_free(const AfSpec& spec, const Dfa& s) {
    return intersect(s, spec.attackers(s)).empty();
}

bool is_acceptable(const AfSpec& spec, const Word& x, const Dfa& s) {
    if (!spec.arguments().contains(x))
        throw PreconditionError("word '" + render_word(spec.alphabet(), x) +
                                "' is not an argument");
    Dfa x_set = Dfa::single_word(spec.alphabet(), x);
    return difference(spec.attackers(x_set), spec.attacked(s)).empty();
}

bool is_admissible(const AfSpec& spec, const Dfa& s) {
    return is_conflict_free(spec, s) &&
           difference(spec.attackers(s), spec.attacked(s)).empty();
}

bool is_stable(const AfSpec& spec, const Dfa& s) {
    return is_conflict_free(spec, s) &&
           union_of(s, spec.attacked(s)) == spec.arguments();
}

Dfa characteristic(const AfSpec& spec, const Dfa& s) {
    const Dfa& x = spec.arguments();
    Dfa undefended = difference(x, spec.attacked(s));
    return difference(x, spec.attacked(undefended));
}

bool is_complete(const AfSpec& spec, const Dfa& s) {
    return is_conflict_free(spec, s) && s == characteristic(spec, s);
}

GroundedResult grounded(const AfSpec& spec, int max_iter) {
    Dfa xk = spec.arguments();
    Dfa yk = difference(xk, spec.attacked(xk));  // the unattacked layer
    Dfa g = yk;
    int k = 0;
    while (!yk.empty()) {
        if (k >= max_iter)
            return {GroundedResult::Status::Exhausted, std::move(g), k};
        // Remove the settled layer and everything it defeats, then peel
        // the next unattacked layer.
        xk = difference(xk, union_of(yk, spec.attacked(yk)));
        yk = difference(xk, spec.attacked(xk));
        g = union_of(g, yk);
        ++k;
    }
    return {GroundedResult::Status::Completed, std::move(g), k};
}

FinitaryStatus finitary_syntactic(const AfSpec& spec) {
    return restrictions_star_free(spec.attack()) ? FinitaryStatus::Guaranteed
                                                 : FinitaryStatus::Unknown;
}

AttackerList attackers_of_word(const AfSpec& spec, const Word& w,
                               std::size_t cap) {
    if (!spec.arguments().contains(w))
        throw PreconditionError("word '" + render_word(spec.alphabet(), w) +
                                "' is not an argument");
    Dfa att = spec.attackers(Dfa::single_word(spec.alphabet(), w));
    if (!att.finite_language())
        return {AttackerList::Status::NonFinitary, {}};
    std::vector<Word> words =
        att.enumerate(cap + 1, static_cast<std::size_t>(att.state_count()));
    if (words.size() > cap) return {AttackerList::Status::CapExceeded, {}};
    return {AttackerList::Status::Finite, std::move(words)};
}

namespace {

/// Streams the words of a language in length-lex order; exhausts after
/// the longest word when the language is finite.
class LengthLexStream {
  public:
    explicit LengthLexStream(Dfa d)
        : d_(std::move(d)), finite_(d_.finite_language()) {}

    std::optional<Word> next() {
        while (idx_ >= buf_.size()) {
            ++len_;
            if (finite_ && len_ > d_.state_count()) return std::nullopt;
            buf_ = d_.words_of_length(static_cast<std::size_t>(len_));
            idx_ = 0;
        }
        return buf_[idx_++];
    }

  private:
    Dfa d_;
    bool finite_;
    int len_ = -1;
    std::vector<Word> buf_;
    std::size_t idx_ = 0;
};

/// Shared machinery of the two semi-decision procedures: the word ->
/// variable map, memoized finite attacker lists, and the clause store.
class SemiDecider {
  public:
    SemiDecider(const AfSpec& spec, std::size_t cap)
        : spec_(spec), cap_(cap) {}

    int var(const Word& w) {
        auto [it, fresh] = vars_.emplace(w, clauses_.num_vars + 1);
        if (fresh) clauses_.new_var();
        return it->second;
    }

    const std::vector<Word>& attackers(const Word& w) {
        auto it = attackers_.find(w);
        if (it != attackers_.end()) return it->second;
        AttackerList al = attackers_of_word(spec_, w, cap_);
        if (al.status == AttackerList::Status::NonFinitary)
            throw PreconditionError(
                "argument '" + render_word(spec_.alphabet(), w) +
                "' has infinitely many attackers");
        if (al.status == AttackerList::Status::CapExceeded)
            throw Error("attacker cap exceeded at argument '" +
                        render_word(spec_.alphabet(), w) + "'");
        return attackers_.emplace(w, std::move(al.words)).first->second;
    }

    void add_conflict_clauses(const Word& w) {
        int zi = var(w);
        for (const Word& att : attackers(w))
            clauses_.add_clause({-zi, -var(att)});
    }

    // w itself is in the candidate set or one of its attackers is.
    void add_range_clause(const Word& w) {
        std::vector<int> lits{var(w)};
        for (const Word& att : attackers(w)) lits.push_back(var(att));
        clauses_.add_clause(std::move(lits));
    }

    // If w is in the candidate set, each of its attackers must be
    // counterattacked by something (that word then also obeys the
    // clauses added when — and if — the schedule reaches it).
    void add_defense_clauses(const Word& w) {
        int zi = var(w);
        for (const Word& att : attackers(w)) {
            std::vector<int> lits{-zi};
            for (const Word& counter : attackers(att))
                lits.push_back(var(counter));
            clauses_.add_clause(std::move(lits));
        }
    }

    void add_clause(std::vector<int> lits) {
        clauses_.add_clause(std::move(lits));
    }

    bool unsatisfiable() { return !sat_solve(clauses_).satisfiable; }

  private:
    const AfSpec& spec_;
    std::size_t cap_;
    ClauseSet clauses_;
    std::map<Word, int> vars_;
    std::map<Word, std::vector<Word>> attackers_;
};

}  // namespace

SemiDecisionResult stable_empty_semidecide(const AfSpec& spec, int budget,
                                           std::size_t cap) {
    SemiDecider sd(spec, cap);
    LengthLexStream stream(spec.arguments());
    for (int k = 1; k <= budget; ++k) {
        std::optional<Word> w = stream.next();
        if (!w) return {SemiDecisionResult::Status::Unknown, k - 1};
        sd.add_conflict_clauses(*w);
        sd.add_range_clause(*w);
        if (sd.unsatisfiable())
            return {SemiDecisionResult::Status::Proven, k};
    }
    return {SemiDecisionResult::Status::Unknown, budget};
}

SemiDecisionResult no_credulous_admissible(const AfSpec& spec,
                                           const std::vector<Word>& r,
                                           int budget, std::size_t cap) {
    SemiDecider sd(spec, cap);
    std::map<Word, bool> processed;
    auto process = [&](const Word& w) {
        if (processed.emplace(w, true).second) {
            sd.add_conflict_clauses(w);
            sd.add_defense_clauses(w);
        }
    };

    std::vector<int> in_r;
    for (const Word& w : r) {
        if (!spec.arguments().contains(w))
            throw PreconditionError("word '" +
                                    render_word(spec.alphabet(), w) +
                                    "' is not an argument");
        in_r.push_back(sd.var(w));
        process(w);
    }
    if (in_r.empty())
        throw PreconditionError("the queried word set is empty");
    sd.add_clause(std::move(in_r));
    if (sd.unsatisfiable()) return {SemiDecisionResult::Status::Proven, 0};

    LengthLexStream stream(spec.arguments());
    for (int k = 1; k <= budget; ++k) {
        std::optional<Word> w = stream.next();
        if (!w) return {SemiDecisionResult::Status::Unknown, k - 1};
        process(*w);
        if (sd.unsatisfiable())
            return {SemiDecisionResult::Status::Proven, k};
    }
    return {SemiDecisionResult::Status::Unknown, budget};
}

}  // namespace afreg
