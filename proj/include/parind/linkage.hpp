// The core decision procedure: the liaison obstruction between a twisted
// segment and a tempered Jordan set, family non-linkage, and the resulting
// irreducibility verdicts.
#pragma once

#include "parind/jordan.hpp"

#include <span>

namespace parind {

// A cuspidal symbol with a non-empty segment [e,f]. Theorem-facing operations
// additionally require e + f != 0.
struct Triple {
    Triple(SymbolId rho, Rat e, Rat f);

    SymbolId rho;
    Rat e, f;

    Segment segment() const { return Segment(rho, e, f); }
    bool operator==(const Triple&) const = default;
};

enum class Verdict { Irreducible, Reducible, Unknown };

std::string_view verdict_name(Verdict v);

// Liaison between (rho,e,f) and the blocks of j. False whenever e is not a
// half-integer. Otherwise:
//  - bad parity of (rho,2|e|+1): some block (rho,a) with a = 2e+1 mod 2 is
//    Zelevinsky-linked with [e,f];
//  - good parity: e >= -1/2 and f <= 1/2, or some block (rho,a) has
//    (a+1)/2 in [e,f] or in [-f,-e].
bool liaison(const Triple& t, const JordanSet& j, const Universe& u);

// No triple is linked with j, and all pairwise induced products (including
// against contragredients) are irreducible.
bool family_not_linked(std::span<const Triple> ts, const JordanSet& j, const Universe& u);

// Non-linkage gives Irreducible unconditionally. A linked family gives
// Reducible only under the genericity hypothesis; otherwise Unknown.
// Requires e + f != 0 for every triple.
Verdict decide_irreducible(std::span<const Triple> ts, const JordanSet& j, bool generic,
                           const Universe& u);

// rho|.|^x x pi is irreducible whenever (rho,x) avoids RP(pi); RP membership
// only flags possible reducibility, hence Unknown.
Verdict single_twist_irreducible(SymbolId rho, const Rat& x, const JordanSet& j,
                                 const Universe& u);

// Reducibility of <e,f>_rho x pi for a generic tempered pi in the low range:
// f <= 0, or f > 0 with (rho,f) in RP(pi). Preconditions: rho self-dual,
// half-integer endpoints, e >= 0, e + f != 0, and good parity of (rho,2e+1)
// and (rho,2|f|+1).
bool generic_reducible_low(const Triple& t, const JordanSet& j, const Universe& u);

} // namespace parind
