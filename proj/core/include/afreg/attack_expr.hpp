#ifndef AFREG_ATTACK_EXPR_HPP
#define AFREG_ATTACK_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "afreg/regex.hpp"

namespace afreg {

/// Node kinds of an attack expression. The binary forms pair an attack
/// subexpression p with a constant regular language K; by construction a
/// K operand is a plain regex and can never mention the identity.
enum class AttackKind {
    Sym,          // a single symbol, denoting {sym}
    Identity,     // the argument-set placeholder I
    Union,        // p U q
    ConcatRight,  // p . [K]
    ConcatLeft,   // [K] . p
    QuotientByK,  // p / [K]
    KQuotientBy,  // [K] / p
    IntersectK,   // p & [K]   (either surface order, normalized)
    Hd,           // hd(p)
    Tl,           // tl(p)
};

struct AttackNode;
using AttackPtr = std::shared_ptr<const AttackNode>;

struct AttackNode {
    AttackKind kind;
    std::string symbol;     // Sym only
    int symbol_index = -1;  // Sym only
    AttackPtr left, right;  // Union both; unary/binary-with-K use left
    RegexPtr k;             // the K operand of the mixed binary forms

    static AttackPtr make_sym(std::string name, int index);
    static AttackPtr make_identity();
    static AttackPtr make_union(AttackPtr p, AttackPtr q);
    static AttackPtr make_concat_right(AttackPtr p, RegexPtr k);
    static AttackPtr make_concat_left(RegexPtr k, AttackPtr p);
    static AttackPtr make_quotient_by_k(AttackPtr p, RegexPtr k);
    static AttackPtr make_k_quotient_by(RegexPtr k, AttackPtr p);
    static AttackPtr make_intersect_k(AttackPtr p, RegexPtr k);
    static AttackPtr make_hd(AttackPtr p);
    static AttackPtr make_tl(AttackPtr p);
};

/// Grammar: aexpr := aterm ('U' aterm)* ; aterm := 'hd(' aexpr ')' |
/// 'tl(' aexpr ')' | '(' aexpr ')' | chain ; chain := operand
/// (('.'|'/'|'&') operand)* ; operand := 'I' | SYMBOL | '[' regex ']' |
/// '(' aexpr ')'. Chains are left-associative; a chain mixing different
/// binary operators must be parenthesized explicitly. Every '.' and '/'
/// takes exactly one bracketed regex operand (on either side); '&'
/// likewise, normalized to IntersectK. Throws ParseError.
AttackPtr parse_attack_expr(std::string_view text, const Alphabet& a);

/// Structural checks as a list of human-readable problems (empty = ok):
/// every symbol in the expression and in embedded K regexes belongs to
/// the alphabet. Never throws.
std::vector<std::string> validate_attack_expr(const AttackPtr& e,
                                              const Alphabet& a);

/// Number of operator applications: Union, the six binary-with-K forms,
/// Hd and Tl. Sym and Identity count zero.
int expr_size(const AttackPtr& e);

/// True iff no K operand anywhere in e contains a star. A sufficient
/// syntactic condition for every argument having finitely many
/// attackers; false does not imply the contrary.
bool restrictions_star_free(const AttackPtr& e);

/// parse_attack_expr(render_attack_expr(e), a) is structurally equal
/// to e.
std::string render_attack_expr(const AttackPtr& e);

/// Structural tree equality.
bool attack_equal(const AttackPtr& a, const AttackPtr& b);

}  // namespace afreg

#endif
