#ifndef AFREG_SERIALIZE_HPP
#define AFREG_SERIALIZE_HPP

#include <string>

#include "afreg/dfa.hpp"

namespace afreg {

/// Canonical JSON encoding of an automaton: keys alphabet, states,
/// start, accepting, transitions (row-major nested arrays). Bit-stable:
/// the same language always serializes to identical bytes.
std::string to_json(const Dfa& d);

/// Graphviz rendering: one node per state, accepting states double
/// circled, one edge per (state, symbol).
std::string to_dot(const Dfa& d);

}  // namespace afreg

#endif
