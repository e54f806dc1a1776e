#ifndef AFREG_REGEX_HPP
#define AFREG_REGEX_HPP

#include <memory>
#include <string>

#include "afreg/dfa.hpp"

namespace afreg {

enum class RegexKind { Empty, Epsilon, Symbol, Union, Concat, Star };

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

/// Immutable regular-expression syntax tree. Symbol nodes carry both the
/// name and the resolved alphabet index.
struct RegexNode {
    RegexKind kind;
    std::string symbol;       // Symbol only
    int symbol_index = -1;    // Symbol only
    RegexPtr left, right;     // Union/Concat both, Star uses left

    static RegexPtr make_empty();
    static RegexPtr make_epsilon();
    static RegexPtr make_symbol(std::string name, int index);
    static RegexPtr make_union(RegexPtr l, RegexPtr r);
    static RegexPtr make_concat(RegexPtr l, RegexPtr r);
    static RegexPtr make_star(RegexPtr child);
};

/// Grammar: regex := term ('+' term)* ; term := factor+ (juxtaposition or
/// '.') ; factor := atom '*'? ; atom := SYMBOL | 'EPS' | 'EMPTY' |
/// '(' regex ')'. Star binds tightest, then concatenation, then union.
/// Throws ParseError with a character position on malformed input or
/// symbols outside the alphabet.
RegexPtr parse_regex(std::string_view text, const Alphabet& a);

/// Minimal-parenthesis rendering; parse_regex(render_regex(r), a)
/// is structurally equal to r.
std::string render_regex(const RegexPtr& r);

/// Structural tree equality.
bool regex_equal(const RegexPtr& a, const RegexPtr& b);

/// True iff no Star node occurs anywhere in the tree.
bool regex_star_free(const RegexPtr& r);

/// Compiles to the canonical automaton of the denoted language.
Dfa compile_regex(const RegexPtr& r, const Alphabet& a);

}  // namespace afreg

#endif
