#include "afreg/oracle.hpp"

namespace afreg {

ExtensionFamilies finite_oracle(const FiniteAf& f) {
    f.check();
    const int n = static_cast<int>(f.argument_names.size());
    if (n > 20) throw Error("finite oracle guard: more than 20 arguments");

    std::vector<std::uint32_t> attackers_of(n, 0), attacks_of(n, 0);
    for (auto [x, y] : f.attack_pairs) {
        attackers_of[y] |= 1u << x;
        attacks_of[x] |= 1u << y;
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    auto attacked_by = [&](std::uint32_t s) {
        std::uint32_t out = 0;
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) out |= attacks_of[i];
        return out;
    };
    auto characteristic_of = [&](std::uint32_t s) {
        std::uint32_t att = attacked_by(s), out = 0;
        for (int i = 0; i < n; ++i)
            if ((attackers_of[i] & ~att) == 0) out |= 1u << i;
        return out;
    };

    ExtensionFamilies fam;
    for (std::uint32_t s = 0; s <= full; ++s) {
        bool cf = true;
        for (int i = 0; cf && i < n; ++i)
            if ((s & (1u << i)) && (attackers_of[i] & s)) cf = false;
        if (!cf) {
            if (s == full) break;
            continue;
        }
        fam.conflict_free.push_back(s);
        std::uint32_t fs = characteristic_of(s);
        if ((s & ~fs) == 0) fam.admissible.push_back(s);
        if (s == fs) fam.complete.push_back(s);
        if ((s | attacked_by(s)) == full) fam.stable.push_back(s);
        if (s == full) break;
    }

    // Grounded two ways: least fixpoint from the empty set, and the
    // least complete extension; they must coincide.
    std::uint32_t g = 0;
    for (;;) {
        std::uint32_t next = characteristic_of(g);
        if (next == g) break;
        g = next;
    }
    bool is_complete_set = false;
    for (std::uint32_t c : fam.complete) {
        if (c == g) is_complete_set = true;
        if ((g & ~c) != 0)
            throw Error("grounded fixpoint not below a complete extension");
    }
    if (!is_complete_set)
        throw Error("grounded fixpoint is not a complete extension");
    fam.grounded = g;
    return fam;
}

}  // namespace afreg
