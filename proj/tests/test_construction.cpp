/*
 * Copyright 2026 the silab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

#include "silab/construction.hpp"
#include "silab/engine.hpp"
#include "silab/predict.hpp"

using namespace silab;

TEST_SUITE_BEGIN("construction");

TEST_CASE("priority map frozen values") {
    CHECK(pp({0, 0, 0, 0, 1}, 5) == 1);
    CHECK(pp({0, 0, 0, 0, 1}, 5000) == 1);
    CHECK(pp({2, 0, 5, 1, 1}, 10) == 6 * 100 * 2 + 30 + 2 + 1);
    CHECK(pp({2, 0, 5, 1, 1}, 10) == 1233);
    CHECK(pp({8, 3, 2, 1, 0}, 9) == 6 * 81 * 8 + 6 * 9 * 3 + 12 + 2);
    CHECK(pp({7, 0, 0, 0, 0}, 12) == 6 * 144 * 7);
    CHECK_THROWS(pp({9, 0, 0, 0, 0}, 5));
    CHECK_THROWS(pp({2, 5, 0, 0, 0}, 5));
    CHECK_THROWS(pp({2, 0, 5, 0, 0}, 5));
    CHECK_THROWS(pp({2, 0, 0, 0, 2}, 5));
    CHECK_THROWS(pp({-1, 0, 0, 0, 0}, 5));
}

TEST_CASE("counter helpers") {
    BitString K = {0, 1, 0, 1}; // bits 1..3 = 1,0,1
    REQUIRE(lsz(K).has_value());
    CHECK(*lsz(K) == 2);
    REQUIRE(nexbit(K, 1).has_value());
    CHECK(*nexbit(K, 1) == 3);
    CHECK(!nexbit(K, 3).has_value());
    REQUIRE(nexbit(K, 0).has_value());
    CHECK(*nexbit(K, 0) == 1);
    CHECK(!lsz(BitString{0, 1, 1, 1}).has_value());
    CHECK(*lsz(BitString{0, 0, 0}) == 1);

    CHECK(bits_increment(make_bits(3, 5)) == make_bits(3, 6));
    CHECK(bits_decrement(make_bits(3, 4)) == make_bits(3, 3));
    CHECK(bits_decrement(make_bits(2, 1)) == make_bits(2, 0));
    CHECK_THROWS(bits_increment(make_bits(2, 3)));
    CHECK_THROWS(bits_decrement(make_bits(2, 0)));

    CHECK(oc(make_bits(3, 5), 0) == make_bits(3, 4));
    CHECK(oc(make_bits(3, 5), 1) == make_bits(3, 5));
}

TEST_CASE("phase lengths and the handoff identity") {
    GadgetParams P;
    P.kind = GameKind::Full;
    P.n = 2;
    P.k = 2;
    P.dC = 2;
    P.lane = 2 * P.k + 4 * P.n + 6;
    BitString K = make_bits(2, 1); // bits (1,0), first zero at 2
    CHECK(P.length(K) == 23);
    CHECK(P.delay(0, K) == P.dC + 2 * P.n + 3);
    CHECK(P.delay(0, K) + P.delay(1, K) == P.length(K));
    // All-ones string: the final era still has a finite schedule.
    BitString ones = make_bits(2, 3);
    CHECK(P.length(ones) == (2 * P.k + 2 * P.n + 6) + 2 * (P.n + 1) + 5);
    for (unsigned long long v = 0; v < 4; ++v) {
        BitString KK = make_bits(2, v);
        CHECK(P.delay(0, KK) + P.delay(1, KK) == P.length(KK));
    }
}

TEST_CASE("clock game shape") {
    GadgetGame gg = build_clock(3);
    const ParityGame &g = gg.game;
    int L = gg.params.lane;
    CHECK(L == 18);
    CHECK(g.size() == 1 + (2 * L + 6 * 3 + 3));
    CHECK_NOTHROW(g.require_strict("test"));

    // Central sink: priority 1, only a self-loop, Even.
    int x = gg.x_id;
    CHECK(g.pri[x] == 1);
    CHECK(g.succ[x] == std::vector<int>{x});
    CHECK(g.owner[x] == Owner::Even);
    OneSinkVerdict v = is_one_sink(g, 0);
    CHECK(v.structural);
    CHECK(v.sink == x);

    // Counter bit rows: d has the ladder up to its own top rung.
    for (int i = 1; i <= 3; ++i) {
        int top = gg.params.ladder_top(i);
        CHECK(top == 2 * 0 + 2 * 3 + 6 + 2 * i);
        std::vector<int> want = {gg.id(Fam::ClkE, 0, i), gg.id(Fam::ClkS, 0),
                                 gg.id(Fam::ClkR, 0)};
        for (int l = 1; l <= top; ++l)
            want.push_back(gg.id(Fam::ClkA, 0, 0, l));
        CHECK(g.succ[gg.id(Fam::ClkD, 0, i)] == want);
        CHECK(g.owner[gg.id(Fam::ClkE, 0, i)] == Owner::Odd);
        CHECK(g.succ[gg.id(Fam::ClkF, 0, i)] ==
              std::vector<int>{gg.id(Fam::ClkE, 0, i)});
        CHECK(g.succ[gg.id(Fam::ClkH, 0, i)] ==
              std::vector<int>{gg.id(Fam::ClkK, 0, i)});
        CHECK(g.succ[gg.id(Fam::ClkG, 0, i)] ==
              std::vector<int>{gg.id(Fam::ClkF, 0, i),
                               gg.id(Fam::ClkK, 0, i)});
    }
    // k_i escapes to x or any higher bit's g.
    CHECK(g.succ[gg.id(Fam::ClkK, 0, 3)] == std::vector<int>{x});
    CHECK(g.succ[gg.id(Fam::ClkK, 0, 1)] ==
          std::vector<int>{x, gg.id(Fam::ClkG, 0, 2), gg.id(Fam::ClkG, 0, 3)});
    // Lane decays downward; the lane head reaches both s and r.
    CHECK(g.succ[gg.id(Fam::ClkT, 0, 0, 2)] ==
          std::vector<int>{gg.id(Fam::ClkR, 0), gg.id(Fam::ClkS, 0),
                           gg.id(Fam::ClkT, 0, 0, 1)});
    CHECK(g.succ[gg.id(Fam::ClkT0, 0)] ==
          std::vector<int>{gg.id(Fam::ClkR, 0), gg.id(Fam::ClkS, 0)});
}

static CircuitSpec compiled_identity(int n) {
    return negate(pad_depths(identity_circuit(n)));
}

TEST_CASE("full build row count and shape") {
    CircuitSpec c = compiled_identity(2);
    BitString B = make_bits(2, 0);
    BuildResult br = build(c, B, 1);
    const GadgetGame &gg = br.gg;
    const ParityGame &g = gg.game;
    const GadgetParams &P = gg.params;

    CHECK(P.n == 2);
    CHECK(P.k == c.k() - 2);
    CHECK(P.lane == 2 * P.k + 4 * P.n + 6);
    CHECK(P.dC >= 1);
    CHECK_NOTHROW(g.require_strict("test"));
    CHECK(is_one_sink(g, 0).structural);

    // Independent row count: sum the table sizes per family.
    int L = P.lane;
    int n_or = 0, n_not = 0;
    for (int i = P.n + 1; i <= P.ck; ++i)
        (c.at(i).kind == GateKind::Or ? n_or : n_not) += 1;
    long long clock_side = 1 + 2LL * L + 6 * P.n + 2;
    long long circuit_side = n_or + (long long)n_not * (2 * L + 5) +
                             (long long)P.n * (2 * L + 11) + 2;
    CHECK(g.size() == 1 + 2 * (clock_side + circuit_side));

    // Owners: exactly the escape deciders belong to Odd.
    for (int v = 0; v < g.size(); ++v) {
        Fam f = gg.key[v].fam;
        bool odd = f == Fam::ClkE || f == Fam::NotE || f == Fam::IoE ||
                   f == Fam::IoQ0;
        CHECK(g.owner[v] == (odd ? Owner::Odd : Owner::Even));
    }

    // Watched edge: the monitored store's d -> e escape.
    int phi = P.ck + 1;
    CHECK(gg.watched_from == gg.id(Fam::IoD, 0, phi));
    CHECK(gg.watched_to == gg.id(Fam::IoE, 0, phi));
    CHECK(g.has_edge(gg.watched_from, gg.watched_to));

    // Store rows move through the handoff pair y/z of their side.
    for (int b = 1; b <= P.n; ++b) {
        int f2 = P.ck + b;
        std::vector<int> want = {gg.id(Fam::MovY, 0), gg.id(Fam::MovZ, 0),
                                 gg.id(Fam::IoE, 0, f2)};
        for (int l = 1; l <= L; ++l)
            want.push_back(gg.id(Fam::IoA, 0, f2, l));
        CHECK(g.succ[gg.id(Fam::IoD, 0, f2)] == want);
        CHECK(g.succ[gg.id(Fam::IoQ1, 0, f2)] ==
              std::vector<int>{gg.id(Fam::ClkR, 1)});
        CHECK(g.succ[gg.id(Fam::IoH1, 0, f2)] ==
              std::vector<int>{gg.id(Fam::ClkR, 0)});
        CHECK(g.succ[gg.id(Fam::IoH2, 0, f2)] ==
              std::vector<int>{gg.id(Fam::ClkR, 1)});
        CHECK(g.succ[gg.id(Fam::IoO, 0, f2)] ==
              std::vector<int>{gg.id(Fam::IoQ0, 0, f2)});
    }
    CHECK(g.succ[gg.id(Fam::MovY, 1)] ==
          std::vector<int>{gg.id(Fam::ClkR, 0), gg.id(Fam::ClkR, 1)});
    CHECK(g.succ[gg.id(Fam::MovZ, 1)] ==
          std::vector<int>{gg.id(Fam::ClkR, 1), gg.id(Fam::ClkS, 1)});

    // Initial strategy: complete, edge-legal, and terminating.
    CHECK_NOTHROW(validate_strategy(g, br.sigma0));
    std::vector<Valuation> val;
    best_response(g, br.sigma0, val);
    CHECK(is_terminating(g, gg.x_id, val));
}

TEST_CASE("priorities decode through the manifest") {
    CircuitSpec c = compiled_identity(2);
    BuildResult br = build(c, make_bits(2, 2), 2);
    const GadgetGame &gg = br.gg;

    std::set<priority_t> seen;
    for (int v = 0; v < gg.game.size(); ++v) {
        const PriorityArgs &a = gg.arg[v];
        CHECK(pp(a, gg.game.size()) == gg.game.pri[v]);
        CHECK(seen.insert(gg.game.pri[v]).second);
        CHECK(gg.game.pri[v] > 0);
    }

    nlohmann::json m = nlohmann::json::parse(gg.manifest());
    CHECK(m["parameters"]["n"] == 2);
    CHECK(m["vertices"].size() == (size_t)gg.game.size());
    CHECK(m["watched_edge"]["from"]["id"] == gg.watched_from);
    for (const auto &row : m["vertices"]) {
        int id = row["id"];
        CHECK(row["priority"] == gg.game.pri[id]);
        CHECK(row["key"] == gg.key[id].name());
    }
}

TEST_CASE("optimal strategy variant rows") {
    CircuitSpec c = compiled_identity(2);
    BitString B = make_bits(2, 0);
    BuildResult br = build_optstrat(c, B, 1);
    const GadgetGame &gg = br.gg;
    const ParityGame &g = gg.game;
    const GadgetParams &P = gg.params;
    int W = P.n + 1;

    // Third clock: n+1 bits, extended lane, clipped final escape.
    CHECK(P.lane_of(2) == P.lane + 2);
    CHECK(g.succ[gg.id(Fam::ClkE, 2, W)] ==
          std::vector<int>{gg.id(Fam::ClkD, 2, W)});
    for (int i = 1; i < W; ++i)
        CHECK(g.succ[gg.id(Fam::ClkE, 2, i)] ==
              std::vector<int>{gg.id(Fam::ClkH, 2, i),
                               gg.id(Fam::ClkD, 2, i)});
    CHECK(gg.has(Fam::ClkH, 2, W));
    CHECK(gg.has(Fam::ClkA, 2, 0, P.lane + 2));
    CHECK(P.ladder_top(W) == P.lane + 2);

    // Relay layer: d's former successors, one hop away, with a bailout.
    int U = P.lane + 3;
    int phi = P.ck + 1;
    int d1z = gg.id(Fam::IoD, 1, phi);
    std::vector<int> relays;
    for (int u = 1; u <= U; ++u) {
        int vu = gg.id(Fam::Relay, 0, u);
        relays.push_back(vu);
        int target = u == 1   ? gg.id(Fam::MovY, 1)
                     : u == 2 ? gg.id(Fam::MovZ, 1)
                     : u == 3 ? gg.id(Fam::IoE, 1, phi)
                              : gg.id(Fam::IoA, 1, phi, u - 3);
        CHECK(g.succ[vu] ==
              std::vector<int>{target, gg.id(Fam::ClkF, 2, W)});
        CHECK(g.owner[vu] == Owner::Even);
    }
    CHECK(g.succ[d1z] == relays);
    CHECK(gg.watched_from == d1z);
    CHECK(gg.watched_to == gg.id(Fam::Relay, 0, 3));
    CHECK_NOTHROW(g.require_strict("test"));
    CHECK_NOTHROW(validate_strategy(g, br.sigma0));
}

TEST_CASE("binary or gadget fragment") {
    ParityGame g;
    int x = g.add(Owner::Even, 1, "x");
    g.add_edge(x, x);
    // Constant stubs: both arms and both clock rails fall to the sink.
    int s = g.add(Owner::Even, 4, "s");
    int r = g.add(Owner::Even, 6, "r");
    int in1 = g.add(Owner::Even, 100, "in1"); // clearly better arm
    int in2 = g.add(Owner::Even, 3, "in2");
    for (int v : {s, r, in1, in2}) g.add_edge(v, x);

    long long V = 16;
    BinaryOrIds ids = build_binary_or_gate(g, V, 5, 0, s, r, in1, in2);
    CHECK(g.succ[ids.o].size() == 2);
    CHECK(g.succ[ids.o1].size() == 2);
    CHECK(g.succ[ids.o2] == std::vector<int>{in1, in2});
    CHECK(g.succ[ids.o] == std::vector<int>{s, ids.o1});
    CHECK(g.succ[ids.o1] == std::vector<int>{r, ids.o2});
    CHECK(g.pri[ids.o] == pp({4, 5, 0, 0, 1}, V));
    CHECK(g.pri[ids.o1] == pp({4, 5, 1, 0, 1}, V));
    CHECK(g.pri[ids.o2] == pp({4, 5, 2, 0, 1}, V));
    CHECK_NOTHROW(g.validate());

    // Against constant stubs the chain settles within two improvement
    // steps from the lowest-id start.
    Strategy s0 = lowest_id_strategy(g, Owner::Even);
    SIResult res = si_run(g, s0, 10);
    CHECK(res.optimal);
    CHECK(res.iterations <= 2);
    CHECK(res.sigma.choice[ids.o2] == in1);
}

TEST_CASE("binary change list arithmetic") {
    CHECK(binary_lane_length(3, 2) == 2 * 3 + 4 * 2 + 6 + 2 * 3);
    CHECK(binary_input_slot(4) == 8);
    CHECK(binary_delay_growth(5) == 5);
}

TEST_SUITE_END();
