#ifndef AFREG_ORACLE_HPP
#define AFREG_ORACLE_HPP

#include <cstdint>

#include "afreg/af_spec.hpp"

namespace afreg {

/// Ground truth for a finite framework, computed by exhaustive subset
/// enumeration. Each set is a bitmask over argument indexes; each
/// family is sorted ascending as integers.
struct ExtensionFamilies {
    std::vector<std::uint32_t> conflict_free;
    std::vector<std::uint32_t> admissible;
    std::vector<std::uint32_t> complete;
    std::vector<std::uint32_t> stable;
    std::uint32_t grounded = 0;
};

/// Brute force over all 2^n subsets; guarded to n <= 20 arguments.
/// The grounded set is computed twice — by iterating the
/// characteristic function from the empty set, and as the least
/// complete extension — and the two must agree (Error otherwise).
ExtensionFamilies finite_oracle(const FiniteAf& f);

}  // namespace afreg

#endif
