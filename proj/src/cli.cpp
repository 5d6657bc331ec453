#include "parind/cli.hpp"

#include "parind/expr.hpp"
#include "parind/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace parind {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kUsage = R"(usage: parind --universe FILE [--json] [--group KIND:DIM[:ns]] COMMAND ARGS

commands:
  linked SEG1 SEG2              Zelevinsky linkage of two segments
  irred [--generic] EXPR        irreducibility verdict for EXPR = segments x pi{...}
  rp ID RAT EXPR                membership of (ID, RAT) in RP of the tempered factor
  suppext EXPR                  extended cuspidal support of EXPR
  generic EXPR                  genericity of the parameter described by EXPR
  gp P1.json P2.json (--demo-oracle | --oracle FILE) [--nu0 LABEL]
                                branching multiplicity table
  jord-update SEG EXPR          block update of pi{...} along SEG
  jacquet POINTS EXPR           Jacquet feasibility of "id^x,id^y,..." against pi{...}

groups: Sp | SOodd | SOeven, e.g. --group SOodd:5 (append :ns for non-quasi-split)
)";

GroupSpace parse_group_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos)
            break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        throw UsageError("malformed --group spec '" + spec + "'");
    GroupSpace g;
    if (parts[0] == "Sp")
        g.kind = GroupKind::Symplectic;
    else if (parts[0] == "SOodd")
        g.kind = GroupKind::OddSpecialOrthogonal;
    else if (parts[0] == "SOeven")
        g.kind = GroupKind::EvenSpecialOrthogonal;
    else
        throw UsageError("unknown group kind '" + parts[0] + "' in --group");
    auto dim = parse_rational(parts[1]);
    if (!dim || !is_integer(*dim))
        throw UsageError("malformed dimension in --group spec '" + spec + "'");
    g.dim = static_cast<int>(dim->numerator());
    if (parts.size() == 3) {
        if (parts[2] != "ns")
            throw UsageError("malformed --group spec '" + spec + "' (expected :ns)");
        g.quasisplit = false;
    }
    g.validate();
    return g;
}

std::string group_spec(const GroupSpace& g) {
    std::string s = std::string(kind_name(g.kind)) + ":" + std::to_string(g.dim);
    if (!g.quasisplit)
        s += ":ns";
    return s;
}

// Group context for a block multiset of total weight w. With no flag, an odd
// weight forces the symplectic kind; an even weight leaves two special
// orthogonal candidates and the caller must agree across them.
std::vector<GroupSpace> resolve_groups(long long weight, const std::optional<GroupSpace>& flag) {
    if (flag) {
        if (flag->dual_dim() != weight)
            throw DomainError("--group " + group_spec(*flag) + " has dual dimension " +
                              std::to_string(flag->dual_dim()) + " but the blocks weigh " +
                              std::to_string(weight));
        return {*flag};
    }
    if (weight % 2 == 1) {
        GroupSpace g;
        g.kind = GroupKind::Symplectic;
        g.dim = static_cast<int>(weight) - 1;
        return {g};
    }
    GroupSpace odd, even;
    odd.kind = GroupKind::OddSpecialOrthogonal;
    odd.dim = static_cast<int>(weight) + 1;
    even.kind = GroupKind::EvenSpecialOrthogonal;
    even.dim = static_cast<int>(weight);
    return {odd, even};
}

long long blocks_weight(const BlockMultiset& blocks, const Universe& u) {
    long long w = 0;
    for (const auto& [block, mult] : blocks)
        w += static_cast<long long>(mult) * block.a * u.dim(block.rho);
    return w;
}

json groups_json(const std::vector<GroupSpace>& gs) {
    json arr = json::array();
    for (const auto& g : gs)
        arr.push_back(group_spec(g));
    return arr;
}

// Evaluates `op` over every candidate group context and insists the answers
// agree; a dependence on the unresolved kind is an error, never a guess.
template <typename T, typename Op>
T agree_over(const std::vector<GroupSpace>& candidates, const BlockMultiset& blocks,
             const Universe& u, Op&& op) {
    std::optional<T> result;
    for (const auto& g : candidates) {
        JordanSet j = JordanSet::make(g, blocks, u);
        T value = op(j);
        if (!result)
            result = std::move(value);
        else if (!(*result == value))
            throw DomainError("group context is ambiguous for this input (candidates " +
                              group_spec(candidates.front()) + " and " +
                              group_spec(candidates.back()) +
                              " disagree); pass --group to fix the kind");
    }
    return *result;
}

json file_to_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw DomainError("file '" + path + "' is not valid JSON: " + e.what());
    }
    return doc;
}

std::string point_text(const CuspidalPoint& p, const Universe& u) {
    return u.name(p.rho) + "^" + to_string(p.x);
}

// display order: symbol id ascending, exponent descending
std::vector<CuspidalPoint> display_sorted(std::vector<CuspidalPoint> points, const Universe& u) {
    std::sort(points.begin(), points.end(), [&](const CuspidalPoint& a, const CuspidalPoint& b) {
        if (u.name(a.rho) != u.name(b.rho))
            return u.name(a.rho) < u.name(b.rho);
        return a.x > b.x;
    });
    return points;
}

json blocks_json(const BlockMultiset& blocks, const Universe& u) {
    std::vector<std::pair<JordanBlock, int>> items(blocks.begin(), blocks.end());
    std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
        if (u.name(x.first.rho) != u.name(y.first.rho))
            return u.name(x.first.rho) < u.name(y.first.rho);
        return x.first.a < y.first.a;
    });
    json arr = json::array();
    for (const auto& [block, mult] : items)
        arr.push_back({u.name(block.rho), block.a, mult});
    return arr;
}

std::string blocks_text(const BlockMultiset& blocks, const Universe& u) {
    Expression e;
    e.tempered = blocks;
    return format_expression(e, u);
}

struct Options {
    std::string universe_path;
    bool json_output = false;
    bool generic = false;
    bool demo_oracle = false;
    std::optional<GroupSpace> group;
    std::optional<std::string> oracle_path;
    std::optional<std::string> nu0;
    std::string command;
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args) {
    Options opt;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size())
                throw UsageError(std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--universe")
            opt.universe_path = need_value("--universe");
        else if (a == "--json")
            opt.json_output = true;
        else if (a == "--generic")
            opt.generic = true;
        else if (a == "--demo-oracle")
            opt.demo_oracle = true;
        else if (a == "--group")
            opt.group = parse_group_spec(need_value("--group"));
        else if (a == "--oracle")
            opt.oracle_path = need_value("--oracle");
        else if (a == "--nu0")
            opt.nu0 = need_value("--nu0");
        else if (a.rfind("--", 0) == 0)
            throw UsageError("unknown flag '" + a + "'");
        else if (opt.command.empty())
            opt.command = a;
        else
            opt.positional.push_back(a);
    }
    if (opt.command.empty())
        throw UsageError("no command given");
    return opt;
}

void require_args(const Options& opt, std::size_t n) {
    if (opt.positional.size() != n)
        throw UsageError("command '" + opt.command + "' expects " + std::to_string(n) +
                         " argument(s), got " + std::to_string(opt.positional.size()));
}

Segment single_segment(const std::string& text, const Universe& u) {
    Expression e = parse_expression(text, u);
    if (e.tempered || e.factors.size() != 1)
        throw DomainError("expected a single segment, got '" + text + "'");
    return e.factors.front();
}

BlockMultiset tempered_only(const std::string& text, const Universe& u) {
    Expression e = parse_expression(text, u);
    if (!e.factors.empty() || !e.tempered)
        throw DomainError("expected a tempered factor pi{...}, got '" + text + "'");
    return *e.tempered;
}

struct Command {
    json doc;          // full --json document
    std::string human; // plain rendering, may span lines
};

Command cmd_linked(const Options& opt, const Universe& u) {
    Segment s1 = single_segment(opt.positional[0], u);
    Segment s2 = single_segment(opt.positional[1], u);
    bool verdict = linked(s1, s2);
    Command c;
    c.doc["command"] = "linked";
    c.doc["inputs"]["s1"] = format_segment(s1, u);
    c.doc["inputs"]["s2"] = format_segment(s2, u);
    c.doc["verdict"] = verdict;
    c.human = verdict ? "true" : "false";
    return c;
}

Command cmd_irred(const Options& opt, const Universe& u) {
    Expression e = parse_expression(opt.positional[0], u);
    std::vector<Triple> triples;
    for (const Segment& s : e.factors)
        triples.emplace_back(s.rho(), s.e(), s.f());
    BlockMultiset blocks = e.tempered.value_or(BlockMultiset{});
    auto candidates = resolve_groups(blocks_weight(blocks, u), opt.group);
    Verdict verdict = agree_over<Verdict>(candidates, blocks, u, [&](const JordanSet& j) {
        return decide_irreducible(triples, j, opt.generic, u);
    });
    Command c;
    c.doc["command"] = "irred";
    c.doc["inputs"]["expr"] = format_expression(e, u);
    c.doc["inputs"]["generic"] = opt.generic;
    c.doc["inputs"]["group"] = groups_json(candidates);
    c.doc["verdict"] = std::string(verdict_name(verdict));
    c.human = std::string(verdict_name(verdict));
    return c;
}

Command cmd_rp(const Options& opt, const Universe& u) {
    SymbolId rho = u.find(opt.positional[0]);
    auto x = parse_rational(opt.positional[1]);
    if (!x)
        throw SyntaxError(0, "malformed rational '" + opt.positional[1] + "'");
    BlockMultiset blocks = tempered_only(opt.positional[2], u);
    auto candidates = resolve_groups(blocks_weight(blocks, u), opt.group);
    bool verdict = agree_over<bool>(candidates, blocks, u, [&](const JordanSet& j) {
        return rp_contains(rho, *x, j, u);
    });
    Command c;
    c.doc["command"] = "rp";
    c.doc["inputs"]["rho"] = u.name(rho);
    c.doc["inputs"]["x"] = to_string(*x);
    c.doc["inputs"]["expr"] = blocks_text(blocks, u);
    c.doc["inputs"]["group"] = groups_json(candidates);
    c.doc["verdict"] = verdict;
    c.human = verdict ? "true" : "false";
    return c;
}

Command cmd_suppext(const Options& opt, const Universe& u) {
    Expression e = parse_expression(opt.positional[0], u);
    BlockMultiset blocks = e.tempered.value_or(BlockMultiset{});
    auto candidates = resolve_groups(blocks_weight(blocks, u), opt.group);
    auto support = agree_over<ExtendedSupport>(candidates, blocks, u, [&](const JordanSet& j) {
        return extended_support_induced(e.factors, j, u);
    });
    auto points = display_sorted(support.points, u);
    Command c;
    c.doc["command"] = "suppext";
    c.doc["inputs"]["expr"] = format_expression(e, u);
    c.doc["inputs"]["group"] = groups_json(candidates);
    json arr = json::array();
    std::string human = "{";
    for (const auto& p : points) {
        arr.push_back({u.name(p.rho), to_string(p.x)});
        if (human.size() > 1)
            human += ", ";
        human += point_text(p, u);
    }
    human += "}";
    c.doc["payload"]["points"] = std::move(arr);
    c.human = std::move(human);
    return c;
}

// Expression -> parameter: a factor with exponent b > 0 is one (rho,a,b)
// block; b = 0 folds into the tempered part as the pair (rho,a),(dual rho,a);
// b < 0 is normalized through the contragredient.
Command cmd_generic(const Options& opt, const Universe& u) {
    Expression e = parse_expression(opt.positional[0], u);
    ParamMultiset blocks;
    BlockMultiset tempered = e.tempered.value_or(BlockMultiset{});
    long long weight = blocks_weight(tempered, u);
    for (Segment s : e.factors) {
        if (s.empty())
            throw DomainError("parameter factors must be non-empty segments");
        if (s.exponent() < Rat(0))
            s = contragredient_segment(s, u);
        int a = static_cast<int>(s.length());
        if (s.exponent() == Rat(0)) {
            tempered[{s.rho(), a}] += 1;
            tempered[{u.dual(s.rho()), a}] += 1;
        } else {
            blocks[{s.rho(), a, s.exponent()}] += 1;
        }
        weight += 2LL * a * u.dim(s.rho());
    }
    auto candidates = resolve_groups(weight, opt.group);
    std::optional<bool> verdict;
    for (const auto& g : candidates) {
        ParamMultiset all = blocks;
        for (const auto& [block, mult] : tempered)
            all[{block.rho, block.a, Rat(0)}] += mult;
        auto p = LanglandsParameter::make(g, std::move(all), std::nullopt, u);
        bool value = is_generic(p, u);
        if (!verdict)
            verdict = value;
        else if (*verdict != value)
            throw DomainError("group context is ambiguous for this input; pass --group");
    }
    Command c;
    c.doc["command"] = "generic";
    c.doc["inputs"]["expr"] = format_expression(e, u);
    c.doc["inputs"]["group"] = groups_json(candidates);
    c.doc["verdict"] = *verdict;
    c.human = *verdict ? "true" : "false";
    return c;
}

Command cmd_jord_update(const Options& opt, const Universe& u) {
    Segment seg = single_segment(opt.positional[0], u);
    BlockMultiset blocks = tempered_only(opt.positional[1], u);
    auto candidates = resolve_groups(blocks_weight(blocks, u), opt.group);
    auto updated =
        agree_over<std::optional<BlockMultiset>>(candidates, blocks, u, [&](const JordanSet& j) {
            auto result = jord_update_from_segment(seg, j, u);
            return result ? std::optional<BlockMultiset>(result->blocks()) : std::nullopt;
        });
    Command c;
    c.doc["command"] = "jord-update";
    c.doc["inputs"]["segment"] = format_segment(seg, u);
    c.doc["inputs"]["expr"] = blocks_text(blocks, u);
    c.doc["inputs"]["group"] = groups_json(candidates);
    if (updated) {
        c.doc["payload"]["blocks"] = blocks_json(*updated, u);
        c.human = blocks_text(*updated, u);
    } else {
        c.doc["verdict"] = "incompatible";
        c.human = "incompatible";
    }
    return c;
}

Command cmd_jacquet(const Options& opt, const Universe& u) {
    auto points = parse_points(opt.positional[0], u);
    BlockMultiset blocks = tempered_only(opt.positional[1], u);
    auto candidates = resolve_groups(blocks_weight(blocks, u), opt.group);
    bool verdict = agree_over<bool>(candidates, blocks, u, [&](const JordanSet& j) {
        return jacquet_feasible(points, j, u);
    });
    Command c;
    c.doc["command"] = "jacquet";
    std::string pts;
    for (const auto& p : points) {
        if (!pts.empty())
            pts += ',';
        pts += point_text(p, u);
    }
    c.doc["inputs"]["points"] = pts;
    c.doc["inputs"]["expr"] = blocks_text(blocks, u);
    c.doc["inputs"]["group"] = groups_json(candidates);
    c.doc["verdict"] = verdict;
    c.human = verdict ? "true" : "false";
    return c;
}

Command cmd_gp(const Options& opt, const Universe& u) {
    if (opt.demo_oracle == opt.oracle_path.has_value())
        throw UsageError("gp needs exactly one of --demo-oracle or --oracle FILE");
    std::vector<std::string> warnings;
    auto p = parameter_from_json(file_to_json(opt.positional[0]), u, &warnings);
    auto p2 = parameter_from_json(file_to_json(opt.positional[1]), u, &warnings);
    GPPair pair{p.group(), p2.group(), opt.nu0};
    std::unique_ptr<EpsilonOracle> owned;
    if (opt.demo_oracle)
        owned = demo_oracle();
    else
        owned = std::make_unique<TableOracle>(
            TableOracle::from_json(file_to_json(*opt.oracle_path), u));
    MultiplicityTable table = multiplicity_table(p, p2, pair, *owned, u);

    Command c;
    c.doc["command"] = "gp";
    c.doc["inputs"]["param"] = opt.positional[0];
    c.doc["inputs"]["param2"] = opt.positional[1];
    c.doc["inputs"]["oracle"] = opt.demo_oracle ? "demo" : *opt.oracle_path;
    if (opt.nu0)
        c.doc["inputs"]["nu0"] = *opt.nu0;
    c.doc["payload"]["mu"] = mu(pair);
    json rows = json::array(), cols = json::array();
    for (const auto& chi : table.rows())
        rows.push_back(character_label(chi, u));
    for (const auto& chi : table.cols())
        cols.push_back(character_label(chi, u));
    c.doc["payload"]["rows"] = rows;
    c.doc["payload"]["cols"] = cols;
    if (table.one())
        c.doc["payload"]["one"] = {table.one()->first, table.one()->second};
    else
        c.doc["payload"]["one"] = nullptr;
    if (!warnings.empty())
        c.doc["warnings"] = warnings;

    std::ostringstream human;
    human << "mu = " << (mu(pair) > 0 ? "+1" : "-1") << "\n";
    if (table.rows().empty() || table.cols().empty()) {
        human << (table.rows().empty() ? "packet of the first parameter is empty"
                                       : "packet of the second parameter is empty")
              << "; all multiplicities 0";
    } else if (table.one()) {
        human << "multiplicity 1 at (" << character_label(table.rows()[table.one()->first], u)
              << ", " << character_label(table.cols()[table.one()->second], u)
              << "); all other entries 0";
    } else {
        human << "all multiplicities 0 (" << table.rows().size() << " x " << table.cols().size()
              << " table)";
    }
    c.human = human.str();
    return c;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool json_output =
        std::find(args.begin(), args.end(), std::string("--json")) != args.end();
    std::string command;

    auto emit_error = [&](const char* kind, const std::string& message, int code) {
        if (json_output) {
            json doc;
            if (!command.empty())
                doc["command"] = command;
            doc["error"]["kind"] = kind;
            doc["error"]["message"] = message;
            out << doc.dump() << "\n";
        } else {
            err << "error: " << message << "\n";
            if (code == 2)
                err << kUsage;
        }
        return code;
    };

    try {
        Options opt = parse_options(args);
        command = opt.command;
        if (opt.universe_path.empty())
            throw DomainError("--universe FILE is required");
        Universe u = Universe::from_json(file_to_json(opt.universe_path));

        Command result;
        if (opt.command == "linked") {
            require_args(opt, 2);
            result = cmd_linked(opt, u);
        } else if (opt.command == "irred") {
            require_args(opt, 1);
            result = cmd_irred(opt, u);
        } else if (opt.command == "rp") {
            require_args(opt, 3);
            result = cmd_rp(opt, u);
        } else if (opt.command == "suppext") {
            require_args(opt, 1);
            result = cmd_suppext(opt, u);
        } else if (opt.command == "generic") {
            require_args(opt, 1);
            result = cmd_generic(opt, u);
        } else if (opt.command == "jord-update") {
            require_args(opt, 2);
            result = cmd_jord_update(opt, u);
        } else if (opt.command == "jacquet") {
            require_args(opt, 2);
            result = cmd_jacquet(opt, u);
        } else if (opt.command == "gp") {
            require_args(opt, 2);
            result = cmd_gp(opt, u);
        } else {
            throw UsageError("unknown command '" + opt.command + "'");
        }

        if (json_output)
            out << result.doc.dump() << "\n";
        else
            out << result.human << "\n";
        return 0;
    } catch (const SyntaxError& e) {
        return emit_error("syntax", e.what(), 2);
    } catch (const UsageError& e) {
        return emit_error("syntax", e.what(), 2);
    } catch (const OracleError& e) {
        return emit_error("oracle", e.what(), 1);
    } catch (const DomainError& e) {
        return emit_error("domain", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error("domain", e.what(), 1);
    }
}

} // namespace parind
