#include <doctest.h>

#include <sstream>

#include "silab/pgio.hpp"
#include "util.hpp"

using namespace silab;

TEST_SUITE_BEGIN("game");

TEST_CASE("structural validation") {
    ParityGame g;
    int a = g.add(Owner::Even, 2);
    g.add_edge(a, a);
    CHECK_NOTHROW(g.validate());

    SUBCASE("terminal vertex rejected") {
        g.add(Owner::Odd, 3);
        CHECK_THROWS(g.validate());
    }
    SUBCASE("out-of-range successor rejected") {
        g.add_edge(a, 5);
        CHECK_THROWS(g.validate());
    }
    SUBCASE("non-positive priority rejected") {
        int b = g.add(Owner::Odd, 0);
        g.add_edge(b, a);
        CHECK_THROWS(g.validate());
    }
}

TEST_CASE("strictness is duplicate-freedom and gates valuation ops") {
    ParityGame g;
    int a = g.add(Owner::Even, 2);
    int b = g.add(Owner::Odd, 2);
    g.add_edge(a, b);
    g.add_edge(b, a);
    CHECK(!g.strict());
    CHECK_THROWS(g.require_strict("test"));
    Strategy s = lowest_id_strategy(g, Owner::Even);
    Strategy t = lowest_id_strategy(g, Owner::Odd);
    CHECK_THROWS(evaluate_profile(g, combine(g, s, t)));
    g.pri[b] = 3;
    CHECK(g.strict());
    CHECK_NOTHROW(g.require_strict("test"));
}

TEST_CASE("strategy validation") {
    ParityGame g;
    int a = g.add(Owner::Even, 2);
    int b = g.add(Owner::Odd, 3);
    g.add_edge(a, b);
    g.add_edge(b, a);
    g.add_edge(b, b);

    Strategy s = lowest_id_strategy(g, Owner::Even);
    CHECK(s.choice[a] == b);
    CHECK(s.choice[b] == -1);
    CHECK_NOTHROW(validate_strategy(g, s));
    s.choice[a] = a; // no such edge
    CHECK_THROWS(validate_strategy(g, s));

    Strategy t = lowest_id_strategy(g, Owner::Odd);
    CHECK(t.choice[b] == a);
}

TEST_CASE("pgsolver round trip preserves the game") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        ParityGame g = testutil::random_strict_game(rng, 2 + trial % 6, 3, 40);
        g.label[0] = "start vertex";
        std::string text = to_pgsolver(g);
        std::istringstream in(text);
        ParityGame h = read_pgsolver(in);
        REQUIRE(h.size() == g.size());
        for (int v = 0; v < g.size(); v++) {
            CHECK(h.owner[v] == g.owner[v]);
            CHECK(h.pri[v] == g.pri[v]);
            CHECK(h.succ[v] == g.succ[v]);
            CHECK(h.label[v] == g.label[v]);
        }
        CHECK(to_pgsolver(h) == text);
    }
}

TEST_CASE("pgsolver parser diagnostics") {
    auto parse = [](const std::string &s) {
        std::istringstream in(s);
        return read_pgsolver(in);
    };
    CHECK_NOTHROW(parse("parity 1;\n0 2 0 1;\n1 3 1 0,1 \"name\";\n"));
    CHECK_THROWS(parse("0 2 0 ;\n"));          // no successors
    CHECK_THROWS(parse("0 2 7 0;\n"));         // bad owner
    CHECK_THROWS(parse("0 2 0 1;\n"));         // vertex 1 never declared
    CHECK_THROWS(parse("0 2 0 0;\n0 3 1 0;")); // declared twice
}

TEST_SUITE_END();
