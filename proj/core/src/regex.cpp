#include "afreg/regex.hpp"

#include <cctype>

namespace afreg {

RegexPtr RegexNode::make_empty() {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Empty;
    return n;
}

RegexPtr RegexNode::make_epsilon() {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Epsilon;
    return n;
}

RegexPtr RegexNode::make_symbol(std::string name, int index) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Symbol;
    n->symbol = std::move(name);
    n->symbol_index = index;
    return n;
}

RegexPtr RegexNode::make_union(RegexPtr l, RegexPtr r) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Union;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

RegexPtr RegexNode::make_concat(RegexPtr l, RegexPtr r) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Concat;
    n->left = std::move(l);
    n->right = std::move(r);
    return n;
}

RegexPtr RegexNode::make_star(RegexPtr child) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Star;
    n->left = std::move(child);
    return n;
}

namespace {

struct Token {
    enum Kind { Sym, Plus, Dot, Star, LParen, RParen, End } kind;
    std::string text;  // Sym only
    std::size_t pos;
};

bool is_punct(char c) {
    return c == '+' || c == '.' || c == '*' || c == '(' || c == ')' ||
           c == '[' || c == ']' || c == '/' || c == '&';
}

std::vector<Token> lex_regex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Token::Plus, "", i++}); continue;
            case '.': out.push_back({Token::Dot, "", i++}); continue;
            case '*': out.push_back({Token::Star, "", i++}); continue;
            case '(': out.push_back({Token::LParen, "", i++}); continue;
            case ')': out.push_back({Token::RParen, "", i++}); continue;
            case '[':
            case ']':
            case '/':
            case '&':
                throw ParseError(std::string("unexpected '") + c + "' in regex", i);
            default: break;
        }
        std::size_t j = i;
        while (j < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[j])) &&
               !is_punct(text[j]))
            ++j;
        out.push_back({Token::Sym, std::string(text.substr(i, j - i)), i});
        i = j;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class RegexParser {
  public:
    RegexParser(std::vector<Token> tokens, const Alphabet& a)
        : tokens_(std::move(tokens)), a_(a) {}

    RegexPtr parse() {
        RegexPtr r = parse_union();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing input in regex", peek().pos);
        return r;
    }

  private:
    const Token& peek() const { return tokens_[index_]; }
    Token take() { return tokens_[index_++]; }

    RegexPtr parse_union() {
        RegexPtr r = parse_term();
        while (peek().kind == Token::Plus) {
            take();
            r = RegexNode::make_union(std::move(r), parse_term());
        }
        return r;
    }

    bool starts_factor() const {
        return peek().kind == Token::Sym || peek().kind == Token::LParen;
    }

    RegexPtr parse_term() {
        RegexPtr r = parse_factor();
        for (;;) {
            if (peek().kind == Token::Dot) {
                take();
                r = RegexNode::make_concat(std::move(r), parse_factor());
            } else if (starts_factor()) {
                r = RegexNode::make_concat(std::move(r), parse_factor());
            } else {
                return r;
            }
        }
    }

    RegexPtr parse_factor() {
        RegexPtr r = parse_atom();
        if (peek().kind == Token::Star) {
            take();
            r = RegexNode::make_star(std::move(r));
        }
        return r;
    }

    RegexPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::LParen) {
            take();
            RegexPtr r = parse_union();
            if (peek().kind != Token::RParen)
                throw ParseError("expected ')' in regex", peek().pos);
            take();
            return r;
        }
        if (t.kind != Token::Sym)
            throw ParseError("expected symbol, 'EPS', 'EMPTY', or '(' in regex",
                             t.pos);
        Token tok = take();
        if (tok.text == "EPS") return RegexNode::make_epsilon();
        if (tok.text == "EMPTY") return RegexNode::make_empty();
        if (Alphabet::is_reserved(tok.text))
            throw ParseError("reserved token '" + tok.text + "' in regex",
                             tok.pos);
        auto idx = a_.index(tok.text);
        if (!idx)
            throw ParseError("unknown symbol '" + tok.text + "' in regex",
                             tok.pos);
        return RegexNode::make_symbol(tok.text, *idx);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    const Alphabet& a_;
};

// Precedence levels for rendering: union 0, concat 1, star 2, atom 3.
// The grammar allows at most one postfix star per atom, so a starred
// star needs parentheses too.
int regex_level(const RegexPtr& r) {
    switch (r->kind) {
        case RegexKind::Union: return 0;
        case RegexKind::Concat: return 1;
        case RegexKind::Star: return 2;
        default: return 3;
    }
}

void render_regex_into(const RegexPtr& r, int min_level, std::string& out) {
    bool parens = regex_level(r) < min_level;
    if (parens) out += '(';
    switch (r->kind) {
        case RegexKind::Empty: out += "EMPTY"; break;
        case RegexKind::Epsilon: out += "EPS"; break;
        case RegexKind::Symbol: out += r->symbol; break;
        case RegexKind::Union:
            render_regex_into(r->left, 0, out);
            out += " + ";
            render_regex_into(r->right, 1, out);
            break;
        case RegexKind::Concat:
            render_regex_into(r->left, 1, out);
            out += ' ';
            render_regex_into(r->right, 2, out);
            break;
        case RegexKind::Star:
            // Star applies to an atom; anything lower-level needs parens.
            render_regex_into(r->left, 3, out);
            out += '*';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

RegexPtr parse_regex(std::string_view text, const Alphabet& a) {
    return RegexParser(lex_regex(text), a).parse();
}

std::string render_regex(const RegexPtr& r) {
    std::string out;
    render_regex_into(r, 0, out);
    return out;
}

bool regex_equal(const RegexPtr& a, const RegexPtr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case RegexKind::Empty:
        case RegexKind::Epsilon: return true;
        case RegexKind::Symbol: return a->symbol == b->symbol;
        case RegexKind::Star: return regex_equal(a->left, b->left);
        default:
            return regex_equal(a->left, b->left) &&
                   regex_equal(a->right, b->right);
    }
}

bool regex_star_free(const RegexPtr& r) {
    if (!r) return true;
    if (r->kind == RegexKind::Star) return false;
    return regex_star_free(r->left) && regex_star_free(r->right);
}

Dfa compile_regex(const RegexPtr& r, const Alphabet& a) {
    switch (r->kind) {
        case RegexKind::Empty: return Dfa::empty_language(a);
        case RegexKind::Epsilon: return Dfa::epsilon_only(a);
        case RegexKind::Symbol: {
            auto idx = a.index(r->symbol);
            if (!idx) throw Error("regex symbol '" + r->symbol +
                                  "' is not in the alphabet");
            return Dfa::single_word(a, Word{*idx});
        }
        case RegexKind::Union:
            return union_of(compile_regex(r->left, a), compile_regex(r->right, a));
        case RegexKind::Concat:
            return concat(compile_regex(r->left, a), compile_regex(r->right, a));
        case RegexKind::Star: return star(compile_regex(r->left, a));
    }
    throw Error("corrupt regex node");
}

}  // namespace afreg
