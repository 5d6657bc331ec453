#include "generators.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace parind;
using namespace parind::test;

TEST_CASE("parameter validation") {
    // weight: tempered once, positive twice
    CHECK_NOTHROW(param(so_odd(11), {{"r1", 4, Rat(1)}, {"r1", 1, Rat(0), 2}}));
    CHECK_THROWS_AS(param(so_odd(7), {{"r1", 4, Rat(1)}}), ValidationError);
    // negative exponent
    CHECK_THROWS_AS(param(so_odd(9), {{"r1", 4, Rat(-1)}, {"r1", 2, Rat(0)}}), ValidationError);
    // tempered part must be closed under contragredient
    CHECK_THROWS_AS(param(so_odd(3), {{"r3", 1, Rat(0)}, {"r1", 1, Rat(0)}}), ValidationError);
    // block lengths start at 1
    CHECK_THROWS_AS(param(so_odd(1), {{"r1", 0, Rat(1)}}), ValidationError);
}

TEST_CASE("discriminant matching on even special orthogonal groups") {
    GroupSpace g = so_even(2);
    g.discriminant = "d1";
    ParamMultiset blocks;
    blocks[{sym("r1"), 2, Rat(0)}] = 1;

    CHECK_THROWS_AS(
        LanglandsParameter::make(g, blocks, std::string("d2"), universe(), nullptr),
        ValidationError);
    CHECK_NOTHROW(LanglandsParameter::make(g, blocks, std::string("d1"), universe(), nullptr));

    std::vector<std::string> warnings;
    LanglandsParameter::make(g, blocks, std::nullopt, universe(), &warnings);
    CHECK(warnings.size() == 1);
}

TEST_CASE("tempered part strips the positive blocks") {
    const Universe& u = universe();
    LanglandsParameter whole = param(so_odd(7), {{"r1", 2, Rat(0), 2}, {"r1", 1, Rat(0), 2}});
    CHECK(tempered_part(whole, u) == jset(so_odd(7), {{"r1", 2, 2}, {"r1", 1, 2}}));

    LanglandsParameter mixed =
        param(so_odd(7), {{"r1", 2, Rat(1)}, {"r1", 1, Rat(0), 2}});
    CHECK(tempered_part(mixed, u) == jset(so_odd(3), {{"r1", 1, 2}}));

    LanglandsParameter positive = param(so_odd(3), {{"r1", 1, Rat(5)}});
    CHECK(tempered_part(positive, u) == jset(so_odd(1), {}));
}

TEST_CASE("standard triples") {
    const Universe& u = universe();
    auto triples = standard_triples(param(so_odd(9), {{"r1", 4, Rat(1)}}), u);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == Triple(sym("r1"), Rat(5, 2), Rat(-1, 2)));

    auto half = standard_triples(param(so_odd(3), {{"r1", 1, Rat(1, 2)}}), u);
    REQUIRE(half.size() == 1);
    CHECK(half[0] == Triple(sym("r1"), Rat(1, 2), Rat(1, 2)));

    CHECK(standard_triples(param(so_odd(3), {{"r1", 2, Rat(0)}}), u).empty());

    SUBCASE("sorted by exponent, then id, then length") {
        auto many = standard_triples(param(so_odd(15),
                                           {{"r1", 1, Rat(1)},
                                            {"r1", 3, Rat(2)},
                                            {"r2", 1, Rat(1)},
                                            {"r1", 1, Rat(0), 2}}),
                                     u);
        REQUIRE(many.size() == 3);
        CHECK(many[0].rho == sym("r1")); // b = 2 first
        CHECK(many[0].e == Rat(3));
        CHECK(many[1].rho == sym("r1")); // b = 1, id r1 before r2
        CHECK(many[1].e == Rat(1));
        CHECK(many[2].rho == sym("r2"));
    }

    SUBCASE("every standard triple has positive exponent sum") {
        Gen gen(211);
        for (int i = 0; i < 100; ++i) {
            auto p = gen.generic_so_parameter(gen.coin());
            for (const Triple& t : standard_triples(p, u))
                CHECK(t.e + t.f > Rat(0));
        }
    }
}

TEST_CASE("genericity") {
    const Universe& u = universe();
    CHECK(is_generic(param(so_odd(7), {{"r1", 2, Rat(0), 2}, {"r1", 1, Rat(0), 2}}), u));
    // the triple (r1,5/2,-1/2) is caught by the low clause of liaison
    CHECK_FALSE(is_generic(param(so_odd(9), {{"r1", 4, Rat(1)}}), u));
    // far-out twist over a trivial tempered part
    CHECK(is_generic(param(so_odd(3), {{"r1", 1, Rat(5)}}), u));
    // two positive blocks whose standard segments [2,1] and [3,2] are linked
    CHECK_FALSE(is_generic(param(so_odd(9), {{"r1", 2, Rat(3, 2)}, {"r1", 2, Rat(5, 2)}}), u));
    // linked only against the contragredient of the partner:
    // <1,1>_r3 meets <0,-1>_r3, the contragredient of <1,0>_r3d
    CHECK_FALSE(is_generic(param(so_odd(7), {{"r3", 1, Rat(1)}, {"r3d", 2, Rat(1, 2)}}), u));
    CHECK(is_generic(param(so_odd(7), {{"r3", 1, Rat(1)}, {"r3d", 2, Rat(5, 2)}}), u));
}

TEST_CASE("component group rank") {
    const Universe& u = universe();
    CHECK(component_rank(jset(so_odd(9), {{"r1", 2}, {"r1", 4}, {"r2", 1}}), u) == 3);
    CHECK(component_rank(jset(so_odd(3), {{"r3", 1}, {"r3d", 1}}), u) == 0);
    CHECK(component_rank(jset(so_odd(1), {}), u) == 0);
    // multiplicity does not add rank
    CHECK(component_rank(jset(so_odd(5), {{"r1", 2, 2}}), u) == 1);
}

TEST_CASE("rank moves by at most two under lowering") {
    const Universe& u = universe();
    Gen gen(223);
    int done = 0;
    for (int i = 0; i < 300; ++i) {
        JordanSet j = gen.jordan();
        for (const auto& [block, mult] : j.blocks()) {
            if (block.a < 2 || !u.selfdual(block.rho))
                continue;
            JordanSet low = lower_blocks(block.rho, block.a, j, u);
            CHECK(std::abs(component_rank(low, u) - component_rank(j, u)) <= 2);
            ++done;
            break;
        }
    }
    CHECK(done > 50);
}

TEST_CASE("character enumeration") {
    const Universe& u = universe();
    auto none = enumerate_characters(jset(so_odd(3), {{"r3", 1}, {"r3d", 1}}), u);
    REQUIRE(none.size() == 1);
    CHECK(none[0].signs.empty());

    auto two = enumerate_characters(jset(so_odd(3), {{"r1", 2}}), u);
    REQUIRE(two.size() == 2);
    CHECK(two[0].signs.at({sym("r1"), 2}) == +1);
    CHECK(two[1].signs.at({sym("r1"), 2}) == -1);

    auto eight = enumerate_characters(jset(so_odd(9), {{"r1", 2}, {"r1", 4}, {"r2", 1}}), u);
    CHECK(eight.size() == 8);
    // lexicographic in block keys: the first flips last
    CHECK(eight[0].signs.at({sym("r2"), 1}) == +1);
    CHECK(eight[1].signs.at({sym("r2"), 1}) == -1);
    CHECK(eight[3].signs.at({sym("r1"), 4}) == -1);

    SUBCASE("count is always a power of two in the rank") {
        Gen gen(227);
        for (int i = 0; i < 100; ++i) {
            JordanSet j = gen.jordan();
            CHECK(enumerate_characters(j, u).size() ==
                  (std::size_t(1) << component_rank(j, u)));
        }
    }
}

TEST_CASE("empty packet rule") {
    const Universe& u = universe();
    // quasi-split: never empty
    CHECK_FALSE(packet_is_empty(param(so_odd(3), {{"r1", 1, Rat(5)}}), u));
    // non-quasi-split with an empty tempered part
    LanglandsParameter p = LanglandsParameter::make(
        so_odd(3, false), {{{sym("r1"), 1, Rat(5)}, 1}}, std::nullopt, u);
    CHECK(packet_is_empty(p, u));
    // non-quasi-split with tempered content
    LanglandsParameter q = LanglandsParameter::make(
        so_odd(3, false), {{{sym("r1"), 2, Rat(0)}, 1}}, std::nullopt, u);
    CHECK_FALSE(packet_is_empty(q, u));
}

TEST_CASE("parameter JSON round trip") {
    const Universe& u = universe();
    LanglandsParameter p =
        param(so_odd(11), {{"r1", 4, Rat(1)}, {"r1", 1, Rat(0), 2}});
    auto doc = parameter_to_json(p, u);
    CHECK(parameter_from_json(doc, u) == p);
    // exponents travel as exact strings
    CHECK(doc.at("blocks").at(1).at(2) == "1");

    auto half = nlohmann::json::parse(R"({
        "group": {"kind": "SOodd", "dim": 3},
        "blocks": [["r1", 1, "1/2"]]
    })");
    LanglandsParameter q = parameter_from_json(half, u);
    auto ts = standard_triples(q, u);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].e == Rat(1, 2));
    CHECK(parameter_from_json(parameter_to_json(q, u), u) == q);

    auto bad = nlohmann::json::parse(R"({
        "group": {"kind": "SOodd", "dim": 3},
        "blocks": [["r1", 1, "1/0"]]
    })");
    CHECK_THROWS_AS(parameter_from_json(bad, u), ValidationError);
}

TEST_CASE("genericity ignores the order of equal exponents") {
    const Universe& u = universe();
    Gen gen(229);
    for (int i = 0; i < 200; ++i) {
        auto p = gen.generic_so_parameter(gen.coin());
        auto ts = standard_triples(p, u);
        auto j0 = tempered_part(p, u);
        std::shuffle(ts.begin(), ts.end(), gen.rng);
        CHECK(family_not_linked(ts, j0, u));
    }
}
