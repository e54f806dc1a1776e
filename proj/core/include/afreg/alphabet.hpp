#ifndef AFREG_ALPHABET_HPP
#define AFREG_ALPHABET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "afreg/errors.hpp"

namespace afreg {

/// A word is a sequence of symbol indexes over some alphabet. The empty
/// vector is the empty word.
using Word = std::vector<int>;

/// An ordered finite set of named symbols. Symbol order is fixed at
/// construction and drives every canonical numbering in the library.
/// Symbol names are tokens and may span several characters (`c2`, `F1`).
class Alphabet {
  public:
    /// Throws Error on duplicates, empty names, or reserved tokens.
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(int i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }

    std::optional<int> index(std::string_view name) const;

    bool operator==(const Alphabet& other) const {
        return symbols_ == other.symbols_;
    }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

    /// Tokens with a fixed meaning in the surface grammars; not usable as
    /// symbol names.
    static bool is_reserved(std::string_view token);

  private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, int> index_;
};

/// Renders a word using the alphabet's symbol names. Tokens are joined
/// without separator when every alphabet symbol is a single character,
/// with a middle dot otherwise. The empty word renders as "EPS".
std::string render_word(const Alphabet& a, const Word& w);

/// Inverse of render_word, also accepting whitespace-separated tokens.
/// Throws ParseError on unknown symbols. "EPS" denotes the empty word.
Word parse_word(const Alphabet& a, std::string_view text);

}  // namespace afreg

#endif
