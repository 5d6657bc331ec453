// Universe of abstract cuspidal symbols and the classical group spaces they
// attach to. Symbols are interned: equality is id equality, duality is a
// declared involution, and the universe is immutable once loaded.
#pragma once

#include "parind/errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace parind {

struct SymbolId {
    std::uint32_t value = 0;
    auto operator<=>(const SymbolId&) const = default;
};

enum class SelfDualType { Orthogonal, Symplectic, NotSelfDual };

struct CuspidalSymbol {
    std::string id;
    int dim = 1;                // d_rho, the n of GL(n)
    SelfDualType selfdual = SelfDualType::Orthogonal;
    SymbolId dual;              // self for the self-dual types
};

class Universe {
public:
    // Self-dual registration (Orthogonal or Symplectic type).
    SymbolId add(std::string id, int dim, SelfDualType type);
    // Registers a symbol together with its distinct contragredient.
    std::pair<SymbolId, SymbolId> add_pair(std::string id, std::string dual_id, int dim);

    SymbolId find(std::string_view id) const; // throws LookupError
    bool has(std::string_view id) const;

    const CuspidalSymbol& at(SymbolId s) const { return symbols_.at(s.value); }
    SymbolId dual(SymbolId s) const { return at(s).dual; }
    bool selfdual(SymbolId s) const { return at(s).selfdual != SelfDualType::NotSelfDual; }
    int dim(SymbolId s) const { return at(s).dim; }
    const std::string& name(SymbolId s) const { return at(s).id; }
    std::size_t size() const { return symbols_.size(); }

    // Declaration file: [{"id":..., "dim":..., "selfdual": "O"|"S"|{"dual": id}}, ...]
    static Universe from_json(const nlohmann::json& doc);

private:
    SymbolId insert(CuspidalSymbol sym);
    std::vector<CuspidalSymbol> symbols_;
};

enum class GroupKind { Symplectic, OddSpecialOrthogonal, EvenSpecialOrthogonal };

std::string_view kind_name(GroupKind k);

struct GroupSpace {
    GroupKind kind = GroupKind::OddSpecialOrthogonal;
    int dim = 1; // d_G
    bool quasisplit = true;
    std::optional<std::string> discriminant; // delta(q), opaque label

    // Dimension of the standard representation of the dual group.
    int dual_dim() const;
    void validate() const; // parity of dim vs kind

    bool operator==(const GroupSpace&) const = default;
};

} // namespace parind
