#include "afreg/attack_expr.hpp"

#include <cctype>

namespace afreg {

namespace {

AttackPtr node(AttackKind kind) {
    auto n = std::make_shared<AttackNode>();
    n->kind = kind;
    return n;
}

AttackNode& mut(const AttackPtr& p) {
    return const_cast<AttackNode&>(*p);
}

}  // namespace

AttackPtr AttackNode::make_sym(std::string name, int index) {
    auto n = node(AttackKind::Sym);
    mut(n).symbol = std::move(name);
    mut(n).symbol_index = index;
    return n;
}

AttackPtr AttackNode::make_identity() { return node(AttackKind::Identity); }

AttackPtr AttackNode::make_union(AttackPtr p, AttackPtr q) {
    auto n = node(AttackKind::Union);
    mut(n).left = std::move(p);
    mut(n).right = std::move(q);
    return n;
}

static AttackPtr with_k(AttackKind kind, AttackPtr p, RegexPtr k) {
    auto n = node(kind);
    mut(n).left = std::move(p);
    mut(n).k = std::move(k);
    return n;
}

AttackPtr AttackNode::make_concat_right(AttackPtr p, RegexPtr k) {
    return with_k(AttackKind::ConcatRight, std::move(p), std::move(k));
}
AttackPtr AttackNode::make_concat_left(RegexPtr k, AttackPtr p) {
    return with_k(AttackKind::ConcatLeft, std::move(p), std::move(k));
}
AttackPtr AttackNode::make_quotient_by_k(AttackPtr p, RegexPtr k) {
    return with_k(AttackKind::QuotientByK, std::move(p), std::move(k));
}
AttackPtr AttackNode::make_k_quotient_by(RegexPtr k, AttackPtr p) {
    return with_k(AttackKind::KQuotientBy, std::move(p), std::move(k));
}
AttackPtr AttackNode::make_intersect_k(AttackPtr p, RegexPtr k) {
    return with_k(AttackKind::IntersectK, std::move(p), std::move(k));
}
AttackPtr AttackNode::make_hd(AttackPtr p) {
    auto n = node(AttackKind::Hd);
    mut(n).left = std::move(p);
    return n;
}
AttackPtr AttackNode::make_tl(AttackPtr p) {
    auto n = node(AttackKind::Tl);
    mut(n).left = std::move(p);
    return n;
}

namespace {

struct Token {
    enum Kind {
        Sym,     // includes the keywords I, U, hd, tl; disambiguated later
        Regex,   // a bracketed [...] operand; text is the inner regex
        Dot,
        Slash,
        Amp,
        LParen,
        RParen,
        End,
    } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex_attack(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_break = [](char c) {
        return c == '.' || c == '/' || c == '&' || c == '(' || c == ')' ||
               c == '[' || c == ']' || c == '+' || c == '*';
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '.': out.push_back({Token::Dot, "", i++}); continue;
            case '/': out.push_back({Token::Slash, "", i++}); continue;
            case '&': out.push_back({Token::Amp, "", i++}); continue;
            case '(': out.push_back({Token::LParen, "", i++}); continue;
            case ')': out.push_back({Token::RParen, "", i++}); continue;
            case '[': {
                std::size_t close = text.find(']', i + 1);
                if (close == std::string_view::npos)
                    throw ParseError("unterminated '[' in attack expression", i);
                out.push_back({Token::Regex,
                               std::string(text.substr(i + 1, close - i - 1)),
                               i});
                i = close + 1;
                continue;
            }
            case ']':
                throw ParseError("unmatched ']' in attack expression", i);
            case '+':
            case '*':
                throw ParseError(
                    "regex operators are only valid inside '[...]'", i);
            default: break;
        }
        std::size_t j = i;
        while (j < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[j])) &&
               !is_break(text[j]))
            ++j;
        out.push_back({Token::Sym, std::string(text.substr(i, j - i)), i});
        i = j;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

// A chain operand is either an attack subexpression or a constant regex.
struct Operand {
    AttackPtr attack;  // exactly one of the two is set
    RegexPtr regex;
    std::size_t pos;
};

class AttackParser {
  public:
    AttackParser(std::vector<Token> tokens, const Alphabet& a)
        : tokens_(std::move(tokens)), a_(a) {}

    AttackPtr parse() {
        AttackPtr e = parse_aexpr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing input in attack expression",
                             peek().pos);
        return e;
    }

  private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& peek2() const {
        return tokens_[index_ + 1 < tokens_.size() ? index_ + 1 : index_];
    }
    Token take() { return tokens_[index_++]; }

    AttackPtr parse_aexpr() {
        AttackPtr e = parse_aterm();
        while (peek().kind == Token::Sym && peek().text == "U") {
            take();
            e = AttackNode::make_union(std::move(e), parse_aterm());
        }
        return e;
    }

    AttackPtr parse_aterm() {
        const Token& t = peek();
        if (t.kind == Token::Sym && (t.text == "hd" || t.text == "tl") &&
            peek2().kind == Token::LParen) {
            Token kw = take();
            take();  // '('
            AttackPtr inner = parse_aexpr();
            if (peek().kind != Token::RParen)
                throw ParseError("expected ')' after " + kw.text + "(...",
                                 peek().pos);
            take();
            return kw.text == "hd" ? AttackNode::make_hd(std::move(inner))
                                   : AttackNode::make_tl(std::move(inner));
        }
        // '(' aexpr ')' is also a valid chain head, so chains subsume it.
        return parse_chain();
    }

    AttackPtr parse_chain() {
        Operand acc = parse_operand();
        int chain_op = -1;  // Token kind of the chain's single operator
        while (peek().kind == Token::Dot || peek().kind == Token::Slash ||
               peek().kind == Token::Amp) {
            Token op = take();
            if (chain_op >= 0 && chain_op != op.kind)
                throw ParseError(
                    "chains mixing '.', '/', '&' must be parenthesized",
                    op.pos);
            chain_op = op.kind;
            Operand rhs = parse_operand();
            acc = apply(op, std::move(acc), std::move(rhs));
        }
        if (!acc.attack)
            throw ParseError(
                "a bracketed regex is not an attack expression by itself",
                acc.pos);
        return acc.attack;
    }

    Operand apply(const Token& op, Operand lhs, Operand rhs) {
        const char* name = op.kind == Token::Dot   ? "'.'"
                           : op.kind == Token::Slash ? "'/'"
                                                     : "'&'";
        if (static_cast<bool>(lhs.regex) == static_cast<bool>(rhs.regex))
            throw ParseError(std::string("exactly one operand of ") + name +
                                 " must be a bracketed regex",
                             op.pos);
        AttackPtr p = lhs.attack ? lhs.attack : rhs.attack;
        RegexPtr k = lhs.regex ? lhs.regex : rhs.regex;
        bool k_left = static_cast<bool>(lhs.regex);
        AttackPtr out;
        switch (op.kind) {
            case Token::Dot:
                out = k_left ? AttackNode::make_concat_left(k, p)
                             : AttackNode::make_concat_right(p, k);
                break;
            case Token::Slash:
                out = k_left ? AttackNode::make_k_quotient_by(k, p)
                             : AttackNode::make_quotient_by_k(p, k);
                break;
            default:
                out = AttackNode::make_intersect_k(p, k);
                break;
        }
        return {std::move(out), nullptr, lhs.pos};
    }

    Operand parse_operand() {
        const Token& t = peek();
        if (t.kind == Token::Regex) {
            Token tok = take();
            try {
                return {nullptr, parse_regex(tok.text, a_), tok.pos};
            } catch (const ParseError& e) {
                // Re-anchor the position to the enclosing input.
                throw ParseError(e.message, tok.pos + 1 + e.position);
            }
        }
        if (t.kind == Token::LParen) {
            Token open = take();
            AttackPtr inner = parse_aexpr();
            if (peek().kind != Token::RParen)
                throw ParseError("expected ')' in attack expression",
                                 peek().pos);
            take();
            return {std::move(inner), nullptr, open.pos};
        }
        if (t.kind != Token::Sym)
            throw ParseError("expected operand in attack expression", t.pos);
        Token tok = take();
        if (tok.text == "I")
            return {AttackNode::make_identity(), nullptr, tok.pos};
        if (Alphabet::is_reserved(tok.text))
            throw ParseError("reserved token '" + tok.text +
                                 "' cannot be an operand",
                             tok.pos);
        auto idx = a_.index(tok.text);
        if (!idx)
            throw ParseError("unknown symbol '" + tok.text +
                                 "' in attack expression",
                             tok.pos);
        return {AttackNode::make_sym(tok.text, *idx), nullptr, tok.pos};
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    const Alphabet& a_;
};

void validate_regex_symbols(const RegexPtr& r, const Alphabet& a,
                            std::vector<std::string>& out) {
    if (!r) return;
    if (r->kind == RegexKind::Symbol && !a.index(r->symbol))
        out.push_back("unknown symbol " + r->symbol);
    validate_regex_symbols(r->left, a, out);
    validate_regex_symbols(r->right, a, out);
}

void validate_into(const AttackPtr& e, const Alphabet& a,
                   std::vector<std::string>& out) {
    if (!e) {
        out.push_back("missing subexpression");
        return;
    }
    switch (e->kind) {
        case AttackKind::Sym:
            if (!a.index(e->symbol))
                out.push_back("unknown symbol " + e->symbol);
            return;
        case AttackKind::Identity: return;
        case AttackKind::Union:
            validate_into(e->left, a, out);
            validate_into(e->right, a, out);
            return;
        case AttackKind::Hd:
        case AttackKind::Tl:
            validate_into(e->left, a, out);
            return;
        default:
            validate_into(e->left, a, out);
            if (!e->k)
                out.push_back("binary form is missing its regex operand");
            else
                validate_regex_symbols(e->k, a, out);
            return;
    }
}

// Operands of '.', '/', '&' must be atoms or parenthesized.
std::string render_operand(const AttackPtr& e) {
    if (e->kind == AttackKind::Sym) return e->symbol;
    if (e->kind == AttackKind::Identity) return "I";
    return "(" + render_attack_expr(e) + ")";
}

std::string render_k(const RegexPtr& k) { return "[" + render_regex(k) + "]"; }

}  // namespace

AttackPtr parse_attack_expr(std::string_view text, const Alphabet& a) {
    return AttackParser(lex_attack(text), a).parse();
}

std::vector<std::string> validate_attack_expr(const AttackPtr& e,
                                              const Alphabet& a) {
    std::vector<std::string> out;
    validate_into(e, a, out);
    return out;
}

int expr_size(const AttackPtr& e) {
    if (!e) return 0;
    int self =
        (e->kind == AttackKind::Sym || e->kind == AttackKind::Identity) ? 0 : 1;
    return self + expr_size(e->left) + expr_size(e->right);
}

bool restrictions_star_free(const AttackPtr& e) {
    if (!e) return true;
    if (e->k && !regex_star_free(e->k)) return false;
    return restrictions_star_free(e->left) && restrictions_star_free(e->right);
}

std::string render_attack_expr(const AttackPtr& e) {
    switch (e->kind) {
        case AttackKind::Sym: return e->symbol;
        case AttackKind::Identity: return "I";
        case AttackKind::Union: {
            // Left-nested unions stay flat; a union on the right needs
            // parentheses to re-parse with the same shape.
            std::string l = render_attack_expr(e->left);
            std::string r = e->right->kind == AttackKind::Union
                                ? "(" + render_attack_expr(e->right) + ")"
                                : render_attack_expr(e->right);
            return l + " U " + r;
        }
        case AttackKind::ConcatRight:
            return render_operand(e->left) + " . " + render_k(e->k);
        case AttackKind::ConcatLeft:
            return render_k(e->k) + " . " + render_operand(e->left);
        case AttackKind::QuotientByK:
            return render_operand(e->left) + " / " + render_k(e->k);
        case AttackKind::KQuotientBy:
            return render_k(e->k) + " / " + render_operand(e->left);
        case AttackKind::IntersectK:
            return render_operand(e->left) + " & " + render_k(e->k);
        case AttackKind::Hd: return "hd(" + render_attack_expr(e->left) + ")";
        case AttackKind::Tl: return "tl(" + render_attack_expr(e->left) + ")";
    }
    throw Error("corrupt attack expression node");
}

bool attack_equal(const AttackPtr& a, const AttackPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    if (a->kind == AttackKind::Sym) return a->symbol == b->symbol;
    if (static_cast<bool>(a->k) != static_cast<bool>(b->k)) return false;
    if (a->k && !regex_equal(a->k, b->k)) return false;
    return attack_equal(a->left, b->left) && attack_equal(a->right, b->right);
}

}  // namespace afreg
