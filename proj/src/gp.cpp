#include "parind/gp.hpp"

#include "parind/json_io.hpp"

namespace parind {

void GPPair::validate() const {
    g.validate();
    gprime.validate();
    if (g.kind == GroupKind::Symplectic || gprime.kind == GroupKind::Symplectic)
        throw ValidationError("branching pairs are formed from special orthogonal groups");
    if (g.dim % 2 == gprime.dim % 2)
        throw ValidationError("branching pair dimensions must have distinct parities");
    if (g.dim <= gprime.dim)
        throw ValidationError("branching pair requires dim(g) > dim(g')");
}

int mu(const GPPair& pair) {
    return (pair.g.quasisplit && pair.gprime.quasisplit) ? +1 : -1;
}

std::pair<JordanSet, JordanSet> reduce_to_tempered(const LanglandsParameter& p,
                                                   const LanglandsParameter& p2,
                                                   const Universe& u) {
    if (!is_generic(p, u))
        throw DomainError("reduce_to_tempered: first parameter is not generic");
    if (!is_generic(p2, u))
        throw DomainError("reduce_to_tempered: second parameter is not generic");
    return {tempered_part(p, u), tempered_part(p2, u)};
}

int MultiplicityTable::entry(std::size_t row, std::size_t col) const {
    if (row >= rows_.size() || col >= cols_.size())
        throw DomainError("multiplicity table index out of range");
    return (one_ && one_->first == row && one_->second == col) ? 1 : 0;
}

namespace {

// The oracle's characters must label members: their domain has to be exactly
// the distinct good-parity blocks of the tempered part they were queried on.
void check_character_domain(const SignCharacter& chi, const JordanSet& j, const Universe& u,
                            const char* which) {
    std::map<JordanBlock, int> expected;
    for (const auto& [block, mult] : j.blocks())
        if (good_parity(block.rho, block.a, j.group(), u))
            expected[block] = 0;
    if (chi.signs.size() != expected.size())
        throw OracleError(std::string("oracle contract: ") + which +
                          " character domain has wrong size");
    for (const auto& [block, sign] : chi.signs) {
        if (!expected.count(block))
            throw OracleError(std::string("oracle contract: ") + which +
                              " character mentions a block outside the component group");
        if (sign != 1 && sign != -1)
            throw OracleError(std::string("oracle contract: ") + which +
                              " character carries a value other than +1/-1");
    }
}

std::size_t index_of(const std::vector<SignCharacter>& all, const SignCharacter& chi,
                     const char* which) {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == chi)
            return i;
    throw OracleError(std::string("oracle contract: ") + which +
                      " character is not an enumerated label");
}

} // namespace

MultiplicityTable multiplicity_table(const LanglandsParameter& p, const LanglandsParameter& p2,
                                     const GPPair& pair, const EpsilonOracle& oracle,
                                     const Universe& u) {
    pair.validate();
    auto same_space = [](const GroupSpace& a, const GroupSpace& b) {
        return a.kind == b.kind && a.dim == b.dim && a.quasisplit == b.quasisplit;
    };
    if (!same_space(p.group(), pair.g))
        throw DomainError("multiplicity_table: first parameter is not over pair.g");
    if (!same_space(p2.group(), pair.gprime))
        throw DomainError("multiplicity_table: second parameter is not over pair.g'");

    auto [j0, j0prime] = reduce_to_tempered(p, p2, u);

    const bool empty_rows = packet_is_empty(p, u);
    const bool empty_cols = packet_is_empty(p2, u);
    std::vector<SignCharacter> rows =
        empty_rows ? std::vector<SignCharacter>{} : enumerate_characters(j0, u);
    std::vector<SignCharacter> cols =
        empty_cols ? std::vector<SignCharacter>{} : enumerate_characters(j0prime, u);
    if (empty_rows || empty_cols)
        return MultiplicityTable(std::move(rows), std::move(cols), std::nullopt);

    EpsilonResult result = oracle.evaluate(j0, j0prime, u);
    if (result.E != 1 && result.E != -1)
        throw OracleError("oracle contract: E must be +1 or -1");
    check_character_domain(result.eps, j0, u, "eps");
    check_character_domain(result.eps_prime, j0prime, u, "eps'");

    if (result.E == -mu(pair))
        return MultiplicityTable(std::move(rows), std::move(cols), std::nullopt);

    std::size_t row = index_of(rows, result.eps, "eps");
    std::size_t col = index_of(cols, result.eps_prime, "eps'");
    return MultiplicityTable(std::move(rows), std::move(cols), std::make_pair(row, col));
}

namespace {

class DemoOracle final : public EpsilonOracle {
public:
    EpsilonResult evaluate(const JordanSet& j, const JordanSet& jprime,
                           const Universe& u) const override {
        EpsilonResult result;
        int combined = component_rank(j, u) + component_rank(jprime, u);
        result.E = combined % 2 == 0 ? +1 : -1;
        for (const auto& [block, mult] : j.blocks())
            if (good_parity(block.rho, block.a, j.group(), u))
                result.eps.signs[block] = +1;
        for (const auto& [block, mult] : jprime.blocks())
            if (good_parity(block.rho, block.a, jprime.group(), u))
                result.eps_prime.signs[block] = +1;
        return result;
    }
};

} // namespace

std::unique_ptr<EpsilonOracle> demo_oracle() {
    return std::make_unique<DemoOracle>();
}

TableOracle TableOracle::from_json(const nlohmann::json& doc, const Universe& u) {
    if (!doc.is_array())
        throw ValidationError("oracle table must be a JSON array of entries");
    TableOracle oracle;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("j") || !entry.contains("jprime") ||
            !entry.contains("E") || !entry.contains("eps") || !entry.contains("epsPrime"))
            throw ValidationError("oracle entry needs fields j, jprime, E, eps, epsPrime");
        JordanSet j = jordan_from_json(entry.at("j"), u);
        JordanSet jprime = jordan_from_json(entry.at("jprime"), u);
        EpsilonResult result;
        result.E = entry.at("E").get<int>();
        if (result.E != 1 && result.E != -1)
            throw ValidationError("oracle entry: E must be 1 or -1");
        result.eps = character_from_json(entry.at("eps"), u);
        result.eps_prime = character_from_json(entry.at("epsPrime"), u);
        std::string key = canonical_pair_key(j, jprime, u);
        if (!oracle.entries_.emplace(std::move(key), std::move(result)).second)
            throw ValidationError("oracle table contains a duplicate pair entry");
    }
    return oracle;
}

EpsilonResult TableOracle::evaluate(const JordanSet& j, const JordanSet& jprime,
                                    const Universe& u) const {
    auto it = entries_.find(canonical_pair_key(j, jprime, u));
    if (it == entries_.end())
        throw OracleError("oracle table has no entry for the queried pair");
    return it->second;
}

} // namespace parind
