// Langlands parameters, standard-module triples, packet genericity, and the
// sign characters labeling packet members.
#pragma once

#include "parind/jordan.hpp"
#include "parind/linkage.hpp"

#include <map>
#include <optional>
#include <vector>

namespace parind {

struct ParamBlock {
    SymbolId rho;
    int a = 1;
    Rat b; // 0 marks the tempered part
    bool operator==(const ParamBlock&) const = default;
    bool operator<(const ParamBlock& o) const {
        if (rho != o.rho)
            return rho < o.rho;
        if (a != o.a)
            return a < o.a;
        return b < o.b;
    }
};

using ParamMultiset = std::map<ParamBlock, int>;

// Multiset of (rho,a,b) blocks over a group space. The b = 0 part is a valid
// Jordan set for the residual dual dimension; blocks with b > 0 count twice
// towards the dual dimension (they come with their contragredients).
class LanglandsParameter {
public:
    static LanglandsParameter make(GroupSpace group, ParamMultiset blocks,
                                   std::optional<std::string> discriminant, const Universe& u,
                                   std::vector<std::string>* warnings = nullptr);

    const GroupSpace& group() const { return group_; }
    const ParamMultiset& blocks() const { return blocks_; }
    const std::optional<std::string>& discriminant() const { return discriminant_; }

    bool operator==(const LanglandsParameter&) const = default;

private:
    LanglandsParameter() = default;
    GroupSpace group_;
    ParamMultiset blocks_;
    std::optional<std::string> discriminant_;
};

// Jordan set of the b = 0 blocks, over the derived smaller group space.
JordanSet tempered_part(const LanglandsParameter& p, const Universe& u);

// One triple (rho, (a-1)/2 + b, -(a-1)/2 + b) per positive-b block copy,
// sorted by b descending, ties by symbol id then a descending.
std::vector<Triple> standard_triples(const LanglandsParameter& p, const Universe& u);

// A parameter is generic when its standard triples are not linked with its
// tempered part; all-tempered parameters are generic.
bool is_generic(const LanglandsParameter& p, const Universe& u);

// Number of independent Z/2Z factors: distinct good-parity blocks.
int component_rank(const JordanSet& j, const Universe& u);

// Sign assignment on the distinct good-parity blocks of a tempered Jordan
// set. For even special orthogonal groups the same labels name classes under
// conjugation by the full orthogonal group.
struct SignCharacter {
    std::map<JordanBlock, int> signs; // values +1 / -1
    bool operator==(const SignCharacter&) const = default;
};

// All 2^rank assignments, in lexicographic order of the block keys with +1
// before -1.
std::vector<SignCharacter> enumerate_characters(const JordanSet& j, const Universe& u);

// True exactly in the degenerate case: non-quasi-split group whose tempered
// part carries no blocks.
bool packet_is_empty(const LanglandsParameter& p, const Universe& u);

} // namespace parind
