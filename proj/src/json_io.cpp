#include "parind/json_io.hpp"

#include <algorithm>

namespace parind {

using nlohmann::json;

json group_to_json(const GroupSpace& g) {
    json doc;
    doc["kind"] = std::string(kind_name(g.kind));
    doc["dim"] = g.dim;
    doc["quasisplit"] = g.quasisplit;
    if (g.discriminant)
        doc["discriminant"] = *g.discriminant;
    return doc;
}

GroupSpace group_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("dim"))
        throw ValidationError("group object needs fields kind and dim");
    GroupSpace g;
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "Sp")
        g.kind = GroupKind::Symplectic;
    else if (kind == "SOodd")
        g.kind = GroupKind::OddSpecialOrthogonal;
    else if (kind == "SOeven")
        g.kind = GroupKind::EvenSpecialOrthogonal;
    else
        throw ValidationError("unknown group kind '" + kind + "'");
    g.dim = doc.at("dim").get<int>();
    g.quasisplit = doc.value("quasisplit", true);
    if (doc.contains("discriminant"))
        g.discriminant = doc.at("discriminant").get<std::string>();
    g.validate();
    return g;
}

namespace {

// (symbol id, a, b) ordering used for all emitted block lists
template <typename Key>
std::vector<std::pair<Key, int>> sorted_blocks(const std::map<Key, int>& blocks,
                                               const Universe& u) {
    std::vector<std::pair<Key, int>> out(blocks.begin(), blocks.end());
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        if (u.name(x.first.rho) != u.name(y.first.rho))
            return u.name(x.first.rho) < u.name(y.first.rho);
        if constexpr (requires { x.first.b; }) {
            if (x.first.a != y.first.a)
                return x.first.a < y.first.a;
            return x.first.b < y.first.b;
        } else {
            return x.first.a < y.first.a;
        }
    });
    return out;
}

} // namespace

json jordan_to_json(const JordanSet& j, const Universe& u) {
    json doc;
    doc["group"] = group_to_json(j.group());
    json blocks = json::array();
    for (const auto& [block, mult] : sorted_blocks(j.blocks(), u))
        blocks.push_back({u.name(block.rho), block.a, mult});
    doc["blocks"] = std::move(blocks);
    return doc;
}

JordanSet jordan_from_json(const json& doc, const Universe& u) {
    if (!doc.is_object() || !doc.contains("group") || !doc.contains("blocks"))
        throw ValidationError("Jordan set object needs fields group and blocks");
    GroupSpace g = group_from_json(doc.at("group"));
    BlockMultiset blocks;
    for (const auto& item : doc.at("blocks")) {
        if (!item.is_array() || item.size() < 2 || item.size() > 3)
            throw ValidationError("Jordan block entry must be [id, a] or [id, a, mult]");
        SymbolId rho = u.find(item.at(0).get<std::string>());
        int a = item.at(1).get<int>();
        int mult = item.size() == 3 ? item.at(2).get<int>() : 1;
        blocks[{rho, a}] += mult;
    }
    return JordanSet::make(std::move(g), std::move(blocks), u);
}

json parameter_to_json(const LanglandsParameter& p, const Universe& u) {
    json doc;
    doc["group"] = group_to_json(p.group());
    json blocks = json::array();
    for (const auto& [block, mult] : sorted_blocks(p.blocks(), u))
        blocks.push_back({u.name(block.rho), block.a, to_string(block.b), mult});
    doc["blocks"] = std::move(blocks);
    if (p.discriminant())
        doc["discriminant"] = *p.discriminant();
    return doc;
}

LanglandsParameter parameter_from_json(const json& doc, const Universe& u,
                                       std::vector<std::string>* warnings) {
    if (!doc.is_object() || !doc.contains("group") || !doc.contains("blocks"))
        throw ValidationError("parameter object needs fields group and blocks");
    GroupSpace g = group_from_json(doc.at("group"));
    ParamMultiset blocks;
    for (const auto& item : doc.at("blocks")) {
        if (!item.is_array() || item.size() < 3 || item.size() > 4)
            throw ValidationError("parameter block entry must be [id, a, b] or [id, a, b, mult]");
        SymbolId rho = u.find(item.at(0).get<std::string>());
        int a = item.at(1).get<int>();
        Rat b;
        if (item.at(2).is_number_integer()) {
            b = Rat(item.at(2).get<long long>());
        } else if (item.at(2).is_string()) {
            auto parsed = parse_rational(item.at(2).get<std::string>());
            if (!parsed)
                throw ValidationError("malformed rational '" + item.at(2).get<std::string>() +
                                      "' in parameter block");
            b = *parsed;
        } else {
            throw ValidationError("parameter block exponent must be an integer or a rational string");
        }
        int mult = item.size() == 4 ? item.at(3).get<int>() : 1;
        blocks[{rho, a, b}] += mult;
    }
    std::optional<std::string> disc;
    if (doc.contains("discriminant"))
        disc = doc.at("discriminant").get<std::string>();
    return LanglandsParameter::make(std::move(g), std::move(blocks), std::move(disc), u, warnings);
}

json character_to_json(const SignCharacter& chi, const Universe& u) {
    json doc = json::object();
    for (const auto& [block, sign] : chi.signs)
        doc[u.name(block.rho) + ":" + std::to_string(block.a)] = sign;
    return doc;
}

SignCharacter character_from_json(const json& doc, const Universe& u) {
    if (!doc.is_object())
        throw ValidationError("sign character must be a JSON object");
    SignCharacter chi;
    for (const auto& [key, value] : doc.items()) {
        auto colon = key.rfind(':');
        if (colon == std::string::npos)
            throw ValidationError("sign character key '" + key + "' must look like id:a");
        SymbolId rho = u.find(key.substr(0, colon));
        auto a_rat = parse_rational(key.substr(colon + 1));
        if (!a_rat || !is_integer(*a_rat) || *a_rat < Rat(1))
            throw ValidationError("sign character key '" + key + "' needs a positive integer a");
        int a = static_cast<int>(a_rat->numerator());
        int sign = value.get<int>();
        if (sign != 1 && sign != -1)
            throw ValidationError("sign character values must be 1 or -1");
        chi.signs[{rho, a}] = sign;
    }
    return chi;
}

std::string character_label(const SignCharacter& chi, const Universe& u) {
    if (chi.signs.empty())
        return "triv";
    std::vector<std::pair<JordanBlock, int>> items(chi.signs.begin(), chi.signs.end());
    std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
        if (u.name(x.first.rho) != u.name(y.first.rho))
            return u.name(x.first.rho) < u.name(y.first.rho);
        return x.first.a < y.first.a;
    });
    std::string label;
    for (const auto& [block, sign] : items) {
        if (!label.empty())
            label += ';';
        label += "(" + u.name(block.rho) + "," + std::to_string(block.a) + "):";
        label += sign > 0 ? '+' : '-';
    }
    return label;
}

std::string canonical_pair_key(const JordanSet& j, const JordanSet& jprime, const Universe& u) {
    json key;
    key["j"] = jordan_to_json(j, u);
    key["jprime"] = jordan_to_json(jprime, u);
    return key.dump();
}

} // namespace parind
