#include "afreg/alphabet.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace afreg {

namespace {
constexpr std::array<std::string_view, 6> kReserved = {
    "EPS", "EMPTY", "I", "U", "hd", "tl"};
}

bool Alphabet::is_reserved(std::string_view token) {
    for (auto r : kReserved) {
        if (token == r) return true;
    }
    return false;
}

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
        const std::string& s = symbols_[i];
        if (s.empty()) throw Error("alphabet symbol names must be non-empty");
        if (is_reserved(s))
            throw Error("alphabet symbol '" + s + "' collides with a reserved token");
        if (!index_.emplace(s, i).second)
            throw Error("duplicate alphabet symbol '" + s + "'");
    }
}

std::optional<int> Alphabet::index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string render_word(const Alphabet& a, const Word& w) {
    if (w.empty()) return "EPS";
    bool all_single = true;
    for (const auto& s : a.symbols())
        if (s.size() != 1) all_single = false;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !all_single) out += "\xc2\xb7";  // middle dot
        out += a.name(w[i]);
    }
    return out;
}

Word parse_word(const Alphabet& a, std::string_view text) {
    // Accept tokens separated by whitespace or middle dots; with an
    // all-single-character alphabet a bare string splits per character.
    std::string t(text);
    std::vector<std::string> tokens;
    std::string cur;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(t[i]))) {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
        } else if (i + 1 < t.size() && static_cast<unsigned char>(t[i]) == 0xc2 &&
                   static_cast<unsigned char>(t[i + 1]) == 0xb7) {
            if (!cur.empty()) tokens.push_back(cur), cur.clear();
            ++i;
        } else {
            cur += t[i];
        }
    }
    if (!cur.empty()) tokens.push_back(cur);

    if (tokens.size() == 1 && tokens[0] == "EPS") return {};

    Word w;
    for (const auto& tok : tokens) {
        if (auto idx = a.index(tok)) {
            w.push_back(*idx);
            continue;
        }
        // Fall back to per-character splitting of this token.
        Word chars;
        bool ok = true;
        for (char c : tok) {
            auto idx = a.index(std::string_view(&c, 1));
            if (!idx) {
                ok = false;
                break;
            }
            chars.push_back(*idx);
        }
        if (!ok) throw ParseError("unknown symbol '" + tok + "' in word", 0);
        w.insert(w.end(), chars.begin(), chars.end());
    }
    return w;
}

}  // namespace afreg
