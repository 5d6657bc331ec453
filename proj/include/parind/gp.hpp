// Branching multiplicity engine: reduction to tempered parts and the
// sign dichotomy that locates the unique multiplicity-one member pair.
// The sign E and the distinguished characters are never computed here; they
// are supplied by an oracle.
#pragma once

#include "parind/packets.hpp"

#include <memory>
#include <optional>

namespace parind {

// An ordered pair of special orthogonal group spaces of distinct dimension
// parities, the larger one first. nu0 is an opaque normalization label.
struct GPPair {
    GroupSpace g;
    GroupSpace gprime;
    std::optional<std::string> nu0;

    void validate() const;
};

// +1 when both groups are quasi-split, -1 otherwise.
int mu(const GPPair& pair);

struct EpsilonResult {
    int E = +1; // +1 or -1
    SignCharacter eps;       // on the tempered part of the first parameter
    SignCharacter eps_prime; // on the tempered part of the second
};

// Deterministic contract: equal inputs must give equal outputs.
class EpsilonOracle {
public:
    virtual ~EpsilonOracle() = default;
    virtual EpsilonResult evaluate(const JordanSet& j, const JordanSet& jprime,
                                   const Universe& u) const = 0;
};

// Both parameters must be generic; returns their tempered parts, the pair the
// multiplicity data of the original pair reduces to.
std::pair<JordanSet, JordanSet> reduce_to_tempered(const LanglandsParameter& p,
                                                   const LanglandsParameter& p2,
                                                   const Universe& u);

// Zero/one table over the member labels of the two packets, with at most a
// single 1.
class MultiplicityTable {
public:
    MultiplicityTable(std::vector<SignCharacter> rows, std::vector<SignCharacter> cols,
                      std::optional<std::pair<std::size_t, std::size_t>> one)
        : rows_(std::move(rows)), cols_(std::move(cols)), one_(one) {}

    const std::vector<SignCharacter>& rows() const { return rows_; }
    const std::vector<SignCharacter>& cols() const { return cols_; }
    const std::optional<std::pair<std::size_t, std::size_t>>& one() const { return one_; }

    int entry(std::size_t row, std::size_t col) const;
    int total_mass() const { return one_ ? 1 : 0; }

    bool operator==(const MultiplicityTable&) const = default;

private:
    std::vector<SignCharacter> rows_, cols_;
    std::optional<std::pair<std::size_t, std::size_t>> one_;
};

// The dichotomy: empty packets give an empty axis; E = -mu gives all zeros;
// E = mu puts the unique 1 at the oracle's pair of characters. Exactly one
// oracle call is made, on the tempered parts.
MultiplicityTable multiplicity_table(const LanglandsParameter& p, const LanglandsParameter& p2,
                                     const GPPair& pair, const EpsilonOracle& oracle,
                                     const Universe& u);

// Stand-in oracle for pipeline tests, with no mathematical content: E is +1
// exactly when the combined component rank of the two inputs is even, and
// both characters assign +1 everywhere.
std::unique_ptr<EpsilonOracle> demo_oracle();

// Table-backed oracle loaded from a JSON document; lookup is by canonical
// serialization of the pair of Jordan sets.
class TableOracle : public EpsilonOracle {
public:
    static TableOracle from_json(const nlohmann::json& doc, const Universe& u);

    EpsilonResult evaluate(const JordanSet& j, const JordanSet& jprime,
                           const Universe& u) const override;

private:
    std::map<std::string, EpsilonResult> entries_;
};

} // namespace parind
