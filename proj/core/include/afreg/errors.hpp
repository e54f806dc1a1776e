#ifndef AFREG_ERRORS_HPP
#define AFREG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace afreg {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lexical or syntactic error while parsing a regex, attack expression,
/// word, or input file. `position` is a byte offset into the input text
/// (or a line number for line-oriented formats).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          message(msg),
          position(position) {}
    std::string message;  // without the position suffix
    std::size_t position;
};

/// A binary automaton operation was invoked on operands over different
/// alphabets.
struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("alphabet mismatch between operands") {}
};

/// A documented operation precondition was violated (set not inside the
/// argument language, word not an argument, ...).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace afreg

#endif
