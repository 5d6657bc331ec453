#include "parind/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace parind {

namespace {

// Ids must be usable as tokens of the expression grammar.
void check_id(const std::string& id) {
    if (id.empty())
        throw ValidationError("symbol id must not be empty");
    if (!(std::isalpha(static_cast<unsigned char>(id[0])) || id[0] == '_'))
        throw ValidationError("symbol id '" + id + "' must start with a letter or '_'");
    for (char c : id)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            throw ValidationError("symbol id '" + id + "' contains an invalid character");
    if (id == "x" || id == "St" || id == "pi")
        throw ValidationError("symbol id '" + id + "' is reserved by the expression grammar");
}

} // namespace

SymbolId Universe::insert(CuspidalSymbol sym) {
    check_id(sym.id);
    if (sym.dim < 1)
        throw ValidationError("symbol '" + sym.id + "': dim must be >= 1");
    if (has(sym.id))
        throw ValidationError("symbol id '" + sym.id + "' already registered");
    SymbolId handle{static_cast<std::uint32_t>(symbols_.size())};
    symbols_.push_back(std::move(sym));
    return handle;
}

SymbolId Universe::add(std::string id, int dim, SelfDualType type) {
    if (type == SelfDualType::NotSelfDual)
        throw ValidationError("symbol '" + id + "': use add_pair for non-self-dual symbols");
    SymbolId handle = insert({std::move(id), dim, type, {}});
    symbols_[handle.value].dual = handle;
    return handle;
}

std::pair<SymbolId, SymbolId> Universe::add_pair(std::string id, std::string dual_id, int dim) {
    if (id == dual_id)
        throw ValidationError("non-self-dual symbol '" + id + "' must have a distinct dual id");
    SymbolId a = insert({std::move(id), dim, SelfDualType::NotSelfDual, {}});
    SymbolId b = insert({std::move(dual_id), dim, SelfDualType::NotSelfDual, {}});
    symbols_[a.value].dual = b;
    symbols_[b.value].dual = a;
    return {a, b};
}

bool Universe::has(std::string_view id) const {
    for (const auto& s : symbols_)
        if (s.id == id)
            return true;
    return false;
}

SymbolId Universe::find(std::string_view id) const {
    for (std::uint32_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].id == id)
            return SymbolId{i};
    throw LookupError("unknown symbol id '" + std::string(id) + "'");
}

Universe Universe::from_json(const nlohmann::json& doc) {
    if (!doc.is_array())
        throw ValidationError("universe file must be a JSON array of symbol declarations");
    Universe u;
    // First pass: create entries; second pass below checks dual links.
    struct Pending { std::string id, dual; int dim; };
    std::vector<Pending> pending;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("dim") ||
            !entry.contains("selfdual"))
            throw ValidationError("universe entry needs fields id, dim, selfdual");
        std::string id = entry.at("id").get<std::string>();
        int dim = entry.at("dim").get<int>();
        const auto& sd = entry.at("selfdual");
        if (sd.is_string()) {
            std::string tag = sd.get<std::string>();
            if (tag == "O")
                u.add(id, dim, SelfDualType::Orthogonal);
            else if (tag == "S")
                u.add(id, dim, SelfDualType::Symplectic);
            else
                throw ValidationError("symbol '" + id + "': selfdual must be \"O\", \"S\" or {\"dual\": id}");
        } else if (sd.is_object() && sd.contains("dual")) {
            pending.push_back({id, sd.at("dual").get<std::string>(), dim});
        } else {
            throw ValidationError("symbol '" + id + "': selfdual must be \"O\", \"S\" or {\"dual\": id}");
        }
    }
    // Each non-self-dual symbol names its partner; the pair must agree on dim
    // and point at each other.
    for (const auto& p : pending) {
        if (u.has(p.id))
            continue; // registered as the partner of an earlier entry
        auto partner = std::find_if(pending.begin(), pending.end(),
                                    [&](const Pending& q) { return q.id == p.dual; });
        if (partner == pending.end())
            throw ValidationError("symbol '" + p.id + "': dual '" + p.dual + "' is not declared");
        if (partner->dual != p.id)
            throw ValidationError("symbols '" + p.id + "' and '" + p.dual + "': dual links must be mutual");
        if (partner->dim != p.dim)
            throw ValidationError("symbols '" + p.id + "' and '" + p.dual + "': dims must agree");
        u.add_pair(p.id, p.dual, p.dim);
    }
    return u;
}

std::string_view kind_name(GroupKind k) {
    switch (k) {
    case GroupKind::Symplectic: return "Sp";
    case GroupKind::OddSpecialOrthogonal: return "SOodd";
    case GroupKind::EvenSpecialOrthogonal: return "SOeven";
    }
    return "?";
}

int GroupSpace::dual_dim() const {
    switch (kind) {
    case GroupKind::Symplectic: return dim + 1;
    case GroupKind::OddSpecialOrthogonal: return dim - 1;
    case GroupKind::EvenSpecialOrthogonal: return dim;
    }
    return 0;
}

void GroupSpace::validate() const {
    switch (kind) {
    case GroupKind::Symplectic:
        if (dim < 0 || dim % 2 != 0)
            throw ValidationError("symplectic group dimension must be even and >= 0");
        break;
    case GroupKind::OddSpecialOrthogonal:
        if (dim < 1 || dim % 2 != 1)
            throw ValidationError("odd special orthogonal group dimension must be odd and >= 1");
        break;
    case GroupKind::EvenSpecialOrthogonal:
        if (dim < 0 || dim % 2 != 0)
            throw ValidationError("even special orthogonal group dimension must be even and >= 0");
        break;
    }
}

} // namespace parind
