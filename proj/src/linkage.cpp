#include "parind/linkage.hpp"

#include <algorithm>

namespace parind {

Triple::Triple(SymbolId rho_, Rat e_, Rat f_) : rho(rho_), e(std::move(e_)), f(std::move(f_)) {
    Segment check(rho, e, f);
    if (check.empty())
        throw DomainError("triple segment must be non-empty");
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::Reducible: return "Reducible";
    case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

bool in_segment(const Rat& x, const Rat& e, const Rat& f) {
    return e >= x && x >= f && is_integer(e - x);
}

} // namespace

bool liaison(const Triple& t, const JordanSet& j, const Universe& u) {
    if (!is_half_integer(t.e))
        return false;
    const int a_e = static_cast<int>(twice(abs(t.e))) + 1;
    if (!good_parity(t.rho, a_e, j.group(), u)) {
        // Zelevinsky linkage against a block of the matching parity. Blocks of
        // the dual symbol are covered through the duality of the predicate.
        Segment seg = t.segment();
        for (const auto& [block, mult] : j.blocks()) {
            if (block.rho != t.rho)
                continue;
            if ((block.a - (static_cast<int>(twice(t.e)) + 1)) % 2 != 0)
                continue;
            Segment steinberg(block.rho, Rat(block.a - 1, 2), Rat(1 - block.a, 2));
            if (linked(seg, steinberg))
                return true;
        }
        return false;
    }
    if (t.e >= Rat(-1, 2) && t.f <= Rat(1, 2))
        return true;
    for (const auto& [block, mult] : j.blocks()) {
        if (block.rho != t.rho)
            continue;
        Rat half(block.a + 1, 2);
        if (in_segment(half, t.e, t.f) || in_segment(half, -t.f, -t.e))
            return true;
    }
    return false;
}

bool family_not_linked(std::span<const Triple> ts, const JordanSet& j, const Universe& u) {
    for (const Triple& t : ts)
        if (liaison(t, j, u))
            return false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Segment si = ts[i].segment();
        for (std::size_t k = 0; k < ts.size(); ++k) {
            if (i == k)
                continue;
            Segment sk = ts[k].segment();
            if (!gl_pair_irreducible(si, sk))
                return false;
            if (!gl_pair_irreducible(si, contragredient_segment(sk, u)))
                return false;
        }
    }
    return true;
}

Verdict decide_irreducible(std::span<const Triple> ts, const JordanSet& j, bool generic,
                           const Universe& u) {
    for (const Triple& t : ts)
        if (t.e + t.f == Rat(0))
            throw DomainError("decide_irreducible requires e + f != 0 for every triple");
    if (family_not_linked(ts, j, u))
        return Verdict::Irreducible;
    return generic ? Verdict::Reducible : Verdict::Unknown;
}

Verdict single_twist_irreducible(SymbolId rho, const Rat& x, const JordanSet& j,
                                 const Universe& u) {
    return rp_contains(rho, x, j, u) ? Verdict::Unknown : Verdict::Irreducible;
}

bool generic_reducible_low(const Triple& t, const JordanSet& j, const Universe& u) {
    if (!u.selfdual(t.rho))
        throw DomainError("generic_reducible_low requires a self-dual symbol");
    if (!is_half_integer(t.e) || !is_half_integer(t.f))
        throw DomainError("generic_reducible_low requires half-integer endpoints");
    if (t.e < Rat(0))
        throw DomainError("generic_reducible_low requires e >= 0");
    if (t.e + t.f == Rat(0))
        throw DomainError("generic_reducible_low requires e + f != 0");
    const int a_e = static_cast<int>(twice(t.e)) + 1;
    const int a_f = static_cast<int>(twice(abs(t.f))) + 1;
    if (!good_parity(t.rho, a_e, j.group(), u) || !good_parity(t.rho, a_f, j.group(), u))
        throw DomainError("generic_reducible_low requires good parity at both endpoints");
    if (t.f <= Rat(0))
        return true;
    return rp_contains(t.rho, t.f, j, u);
}

} // namespace parind
