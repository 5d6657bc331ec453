#include "parind/packets.hpp"

#include <algorithm>

namespace parind {

LanglandsParameter LanglandsParameter::make(GroupSpace group, ParamMultiset blocks,
                                            std::optional<std::string> discriminant,
                                            const Universe& u,
                                            std::vector<std::string>* warnings) {
    group.validate();
    long long tempered_weight = 0;
    long long positive_weight = 0;
    BlockMultiset tempered;
    for (const auto& [block, mult] : blocks) {
        if (block.a < 1)
            throw ValidationError("parameter block (" + u.name(block.rho) + "," +
                                  std::to_string(block.a) + "): a must be >= 1");
        if (mult < 1)
            throw ValidationError("parameter block multiplicities must be >= 1");
        if (block.b < Rat(0))
            throw ValidationError("parameter block (" + u.name(block.rho) + "," +
                                  std::to_string(block.a) + "): b must be >= 0");
        long long w = static_cast<long long>(mult) * block.a * u.dim(block.rho);
        if (block.b == Rat(0)) {
            tempered_weight += w;
            tempered[{block.rho, block.a}] += mult;
        } else {
            positive_weight += w;
        }
    }
    if (tempered_weight + 2 * positive_weight != group.dual_dim())
        throw ValidationError("parameter weight " +
                              std::to_string(tempered_weight + 2 * positive_weight) +
                              " does not match dual dimension " +
                              std::to_string(group.dual_dim()));

    LanglandsParameter p;
    p.group_ = std::move(group);
    p.blocks_ = std::move(blocks);
    p.discriminant_ = std::move(discriminant);
    tempered_part(p, u); // validates closure of the b = 0 part

    if (p.group_.kind == GroupKind::EvenSpecialOrthogonal) {
        if (p.discriminant_ && p.group_.discriminant) {
            if (*p.discriminant_ != *p.group_.discriminant)
                throw ValidationError("parameter discriminant '" + *p.discriminant_ +
                                      "' does not match group discriminant '" +
                                      *p.group_.discriminant + "'");
        } else if (warnings) {
            warnings->push_back("even special orthogonal group: discriminant match not checked "
                                "(label missing)");
        }
    }
    return p;
}

JordanSet tempered_part(const LanglandsParameter& p, const Universe& u) {
    BlockMultiset tempered;
    long long positive_weight = 0;
    for (const auto& [block, mult] : p.blocks()) {
        if (block.b == Rat(0))
            tempered[{block.rho, block.a}] += mult;
        else
            positive_weight += static_cast<long long>(mult) * block.a * u.dim(block.rho);
    }
    GroupSpace g0 = p.group();
    g0.dim -= static_cast<int>(2 * positive_weight);
    return JordanSet::make(std::move(g0), std::move(tempered), u);
}

std::vector<Triple> standard_triples(const LanglandsParameter& p, const Universe& u) {
    std::vector<Triple> triples;
    for (const auto& [block, mult] : p.blocks()) {
        if (block.b == Rat(0))
            continue;
        Rat half(block.a - 1, 2);
        for (int c = 0; c < mult; ++c)
            triples.emplace_back(block.rho, half + block.b, -half + block.b);
    }
    std::stable_sort(triples.begin(), triples.end(), [&](const Triple& s, const Triple& t) {
        Rat bs = (s.e + s.f) / 2, bt = (t.e + t.f) / 2;
        if (bs != bt)
            return bs > bt;
        if (u.name(s.rho) != u.name(t.rho))
            return u.name(s.rho) < u.name(t.rho);
        return s.e - s.f > t.e - t.f; // a descending
    });
    return triples;
}

bool is_generic(const LanglandsParameter& p, const Universe& u) {
    return family_not_linked(standard_triples(p, u), tempered_part(p, u), u);
}

int component_rank(const JordanSet& j, const Universe& u) {
    int rank = 0;
    for (const auto& [block, mult] : j.blocks())
        if (good_parity(block.rho, block.a, j.group(), u))
            ++rank;
    return rank;
}

std::vector<SignCharacter> enumerate_characters(const JordanSet& j, const Universe& u) {
    std::vector<JordanBlock> keys;
    for (const auto& [block, mult] : j.blocks())
        if (good_parity(block.rho, block.a, j.group(), u))
            keys.push_back(block);
    std::sort(keys.begin(), keys.end(), [&](const JordanBlock& x, const JordanBlock& y) {
        if (u.name(x.rho) != u.name(y.rho))
            return u.name(x.rho) < u.name(y.rho);
        return x.a < y.a;
    });
    const std::size_t rank = keys.size();
    std::vector<SignCharacter> out;
    out.reserve(std::size_t(1) << rank);
    for (std::size_t code = 0; code < (std::size_t(1) << rank); ++code) {
        SignCharacter chi;
        for (std::size_t k = 0; k < rank; ++k) {
            bool minus = (code >> (rank - 1 - k)) & 1;
            chi.signs[keys[k]] = minus ? -1 : +1;
        }
        out.push_back(std::move(chi));
    }
    return out;
}

bool packet_is_empty(const LanglandsParameter& p, const Universe& u) {
    return !p.group().quasisplit && tempered_part(p, u).empty();
}

} // namespace parind
