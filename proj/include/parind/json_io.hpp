// Canonical JSON readers and writers for the declared file formats. Emission
// is deterministic: object keys are sorted and block lists are ordered by
// (symbol id, a, b).
#pragma once

#include "parind/gp.hpp"

#include <json.hpp>

namespace parind {

nlohmann::json group_to_json(const GroupSpace& g);
GroupSpace group_from_json(const nlohmann::json& doc);

// {"group": {...}, "blocks": [[id, a, mult], ...]}
nlohmann::json jordan_to_json(const JordanSet& j, const Universe& u);
JordanSet jordan_from_json(const nlohmann::json& doc, const Universe& u);

// {"group": {...}, "blocks": [[id, a, b, mult], ...], "discriminant": ...}
// b is carried as an exact rational string.
nlohmann::json parameter_to_json(const LanglandsParameter& p, const Universe& u);
LanglandsParameter parameter_from_json(const nlohmann::json& doc, const Universe& u,
                                       std::vector<std::string>* warnings = nullptr);

// {"id:a": 1|-1, ...}
nlohmann::json character_to_json(const SignCharacter& chi, const Universe& u);
SignCharacter character_from_json(const nlohmann::json& doc, const Universe& u);

// Compact display label, e.g. "(r1,2):+;(r1,4):-"; "triv" for the empty one.
std::string character_label(const SignCharacter& chi, const Universe& u);

// Canonical lookup key for an oracle table entry.
std::string canonical_pair_key(const JordanSet& j, const JordanSet& jprime, const Universe& u);

} // namespace parind
