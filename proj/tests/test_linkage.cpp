#include "generators.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace parind;
using namespace parind::test;

namespace {

Triple contragredient(const Triple& t, const Universe& u) {
    return Triple(u.dual(t.rho), -t.f, -t.e);
}

} // namespace

TEST_CASE("liaison on the documented instances") {
    const Universe& u = universe();
    JordanSet j1 = jset(so_odd(3), {{"r1", 2}});
    // good parity branch, low clause: e >= -1/2 and f <= 1/2
    CHECK(liaison(Triple(sym("r1"), Rat(3, 2), Rat(1, 2)), j1, u));

    // good parity branch, block membership (a+1)/2 in [e,f]
    JordanSet j6 = jset(so_odd(7), {{"r1", 6}});
    CHECK(liaison(Triple(sym("r1"), Rat(7, 2), Rat(5, 2)), j6, u));
    CHECK_FALSE(liaison(Triple(sym("r1"), Rat(7, 2), Rat(5, 2)), j1, u));

    // non-half-integer endpoint: never linked
    CHECK_FALSE(liaison(Triple(sym("r1"), Rat(10, 3), Rat(1, 3)), j6, u));

    // bad parity branch goes through Zelevinsky linkage with the blocks
    JordanSet jbad = jset(so_odd(7), {{"r1", 3, 2}}); // (r1,3) bad parity over SOodd
    CHECK(liaison(Triple(sym("r1"), Rat(2), Rat(1)), jbad, u));   // [2,1] linked with [1,-1]
    CHECK_FALSE(liaison(Triple(sym("r1"), Rat(4), Rat(3)), jbad, u)); // disjoint, not adjacent
    // good parity branch: 2 sits in [5/2,3/2] only at a non-integral offset
    CHECK_FALSE(liaison(Triple(sym("r1"), Rat(5, 2), Rat(3, 2)), jbad, u));
}

TEST_CASE("liaison boundary at the low clause") {
    const Universe& u = universe();
    JordanSet j = jset(so_odd(3), {{"r1", 2}});
    // e = -1/2 still satisfies the low clause
    CHECK(liaison(Triple(sym("r1"), Rat(-1, 2), Rat(-1, 2)), j, u));
    // below it only block membership can fire: (a+1)/2 = 3/2 with a = 2
    CHECK(liaison(Triple(sym("r1"), Rat(-3, 2), Rat(-3, 2)), j, u));
    JordanSet j4 = jset(so_odd(5), {{"r1", 4}});
    CHECK_FALSE(liaison(Triple(sym("r1"), Rat(-3, 2), Rat(-3, 2)), j4, u));
}

TEST_CASE("liaison duality") {
    const Universe& u = universe();
    Gen gen(101);
    for (int i = 0; i < 2000; ++i) {
        JordanSet j = gen.jordan();
        Triple t = gen.triple();
        Triple ct = contragredient(t, u);
        CAPTURE(to_string(t.e));
        CAPTURE(to_string(t.f));
        CHECK(liaison(t, j, u) == liaison(ct, j, u));
    }
}

TEST_CASE("family linkage") {
    const Universe& u = universe();
    JordanSet j = jset(so_odd(3), {{"r1", 2}});
    CHECK(family_not_linked({}, j, u));

    std::vector<Triple> far = {Triple(sym("r1"), Rat(9, 2), Rat(7, 2))};
    CHECK(family_not_linked(far, j, u));

    // the two segments are Zelevinsky-linked with each other
    std::vector<Triple> pair = {Triple(sym("r1"), Rat(2), Rat(1)),
                                Triple(sym("r1"), Rat(1), Rat(0))};
    CHECK_FALSE(family_not_linked(pair, j, u));

    // linked against the contragredient of the partner
    std::vector<Triple> cpair = {Triple(sym("r1"), Rat(2), Rat(1)),
                                 Triple(sym("r1"), Rat(0), Rat(-1))};
    CHECK_FALSE(family_not_linked(cpair, j, u));
}

TEST_CASE("irreducibility verdicts") {
    const Universe& u = universe();
    JordanSet j = jset(so_odd(3), {{"r1", 2}});
    CHECK(decide_irreducible({}, j, true, u) == Verdict::Irreducible);
    CHECK(decide_irreducible({}, j, false, u) == Verdict::Irreducible);

    std::vector<Triple> linked_family = {Triple(sym("r1"), Rat(3, 2), Rat(1, 2))};
    CHECK(decide_irreducible(linked_family, j, true, u) == Verdict::Reducible);
    CHECK(decide_irreducible(linked_family, j, false, u) == Verdict::Unknown);

    std::vector<Triple> balanced = {Triple(sym("r1"), Rat(0), Rat(0))};
    CHECK_THROWS_AS(decide_irreducible(balanced, j, true, u), DomainError);
}

TEST_CASE("non-half-integer families are irreducible") {
    const Universe& u = universe();
    Gen gen(103);
    for (int i = 0; i < 300; ++i) {
        JordanSet j = gen.jordan();
        Rat f(gen.pick(-9, 9), 3);
        if (is_half_integer(f))
            continue;
        Triple t(gen.any_symbol(), f + Rat(gen.pick(0, 3)), f);
        if (t.e + t.f == Rat(0))
            continue;
        std::vector<Triple> ts = {t};
        CHECK(decide_irreducible(ts, j, true, u) == Verdict::Irreducible);
    }
}

TEST_CASE("verdicts are stable under permutation and contragredient swaps") {
    const Universe& u = universe();
    Gen gen(107);
    for (int i = 0; i < 1000; ++i) {
        JordanSet j = gen.jordan();
        std::vector<Triple> ts = gen.family();
        bool generic = gen.coin();
        Verdict base = decide_irreducible(ts, j, generic, u);

        std::vector<Triple> shuffled = ts;
        std::shuffle(shuffled.begin(), shuffled.end(), gen.rng);
        CHECK(decide_irreducible(shuffled, j, generic, u) == base);

        if (!ts.empty()) {
            std::vector<Triple> swapped = ts;
            std::size_t k = static_cast<std::size_t>(gen.pick(0, int(ts.size()) - 1));
            swapped[k] = contragredient(swapped[k], u);
            CHECK(decide_irreducible(swapped, j, generic, u) == base);
        }
    }
}

TEST_CASE("single twist verdicts") {
    const Universe& u = universe();
    JordanSet j = jset(so_odd(3), {{"r1", 2}});
    CHECK(single_twist_irreducible(sym("r3"), Rat(2), j, u) == Verdict::Irreducible);
    CHECK(single_twist_irreducible(sym("r1"), Rat(3, 5), j, u) == Verdict::Irreducible);
    CHECK(single_twist_irreducible(sym("r1"), Rat(3, 2), j, u) == Verdict::Unknown);
}

TEST_CASE("a twist outside RP is never declared reducible without liaison") {
    const Universe& u = universe();
    Gen gen(109);
    for (int i = 0; i < 2000; ++i) {
        JordanSet j = gen.jordan();
        SymbolId rho = gen.any_symbol();
        Rat x = gen.coin() ? gen.half_int() : Rat(gen.pick(-9, 9), 3);
        if (rp_contains(rho, x, j, u))
            continue;
        CHECK(single_twist_irreducible(rho, x, j, u) == Verdict::Irreducible);
        if (x == Rat(0))
            continue;
        std::vector<Triple> ts = {Triple(rho, x, x)};
        Verdict v = decide_irreducible(ts, j, true, u);
        if (v == Verdict::Reducible)
            CHECK(liaison(ts[0], j, u));
        // for a self-dual symbol the liaison route agrees exactly: RP
        // membership is the only obstruction a single twist can meet
        if (u.selfdual(rho))
            CHECK(v == Verdict::Irreducible);
    }
}

TEST_CASE("low-range reducibility for generic tempered representations") {
    const Universe& u = universe();
    JordanSet j1 = jset(so_odd(3), {{"r1", 2}});
    CHECK(generic_reducible_low(Triple(sym("r1"), Rat(3, 2), Rat(-1, 2)), j1, u)); // f <= 0
    CHECK(generic_reducible_low(Triple(sym("r1"), Rat(5, 2), Rat(3, 2)), j1, u));  // f in RP
    CHECK_FALSE(generic_reducible_low(Triple(sym("r1"), Rat(7, 2), Rat(5, 2)), j1, u));

    SUBCASE("preconditions enforced") {
        CHECK_THROWS_AS(generic_reducible_low(Triple(sym("r3"), Rat(1), Rat(-1)), j1, u),
                        DomainError); // not self-dual
        CHECK_THROWS_AS(generic_reducible_low(Triple(sym("r1"), Rat(1, 2), Rat(-1, 2)), j1, u),
                        DomainError); // e + f = 0
        CHECK_THROWS_AS(generic_reducible_low(Triple(sym("r1"), Rat(2), Rat(1)), j1, u),
                        DomainError); // bad parity endpoints over this group
    }

    SUBCASE("implies the theorem-level verdict") {
        Gen gen(113);
        int done = 0;
        for (int i = 0; i < 3000; ++i) {
            JordanSet j = gen.jordan();
            SymbolId rho = gen.selfdual_symbol();
            Rat f = gen.half_int(3);
            Rat e = f + Rat(gen.pick(0, 4));
            if (e < Rat(0) || e + f == Rat(0))
                continue;
            Triple t(rho, e, f);
            int ae = static_cast<int>(twice(e)) + 1;
            int af = static_cast<int>(twice(abs(f))) + 1;
            if (!good_parity(rho, ae, j.group(), u) || !good_parity(rho, af, j.group(), u))
                continue;
            if (!generic_reducible_low(t, j, u))
                continue;
            std::vector<Triple> ts = {t};
            CHECK(decide_irreducible(ts, j, true, u) == Verdict::Reducible);
            ++done;
        }
        CHECK(done > 100);
    }
}
