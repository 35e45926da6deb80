#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "silab/exhaustive.hpp"
#include "silab/pgio.hpp"
#include "util.hpp"

using namespace silab;
using testutil::random_one_sink_game;
using testutil::random_strict_game;

namespace {

/* Sink x plus a chain of vertices feeding it. */
ParityGame sink_chain(const std::vector<priority_t> &pris) {
    ParityGame g;
    g.add(Owner::Odd, 1, "x");
    g.add_edge(0, 0);
    for (size_t i = 0; i < pris.size(); i++) {
        int v = g.add(Owner::Even, pris[i]);
        g.add_edge(v, v - 1);
    }
    return g;
}

/* Recompute a valuation from the play itself; independent of the engine's
 * shared-suffix bookkeeping. */
Valuation valuation_from_play(const ParityGame &g, const Play &p) {
    Valuation val;
    val.p = g.pri[p.cycle.front()];
    for (int v : p.cycle) val.p = std::max(val.p, g.pri[v]);
    for (int v : p.prefix)
        if (g.pri[v] > val.p) set_insert(val.s, g.pri[v]);
    // The dominant itself owns the whole loop as its finite path.
    val.d = p.prefix.size() == 1 ? (int)p.cycle.size() : (int)p.prefix.size();
    return val;
}

} // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("plays split at the dominant cycle vertex") {
    ParityGame g = sink_chain({3});
    Strategy s = lowest_id_strategy(g, Owner::Even);
    Strategy t = lowest_id_strategy(g, Owner::Odd);

    Play p = play(g, 0, s, t);
    CHECK(p.prefix == std::vector<int>{0});
    CHECK(p.cycle == std::vector<int>{0});

    p = play(g, 1, s, t);
    CHECK(p.prefix == std::vector<int>{1, 0});
    CHECK(p.cycle == std::vector<int>{0});
}

TEST_CASE("valuation of the sink and of a chain above it") {
    ParityGame g = sink_chain({3, 8});
    Strategy s = lowest_id_strategy(g, Owner::Even);
    Strategy t = lowest_id_strategy(g, Owner::Odd);
    CHECK(vj_valuation(g, s, t, 0) == Valuation{1, {}, 1});
    CHECK(vj_valuation(g, s, t, 1) == Valuation{1, {3}, 2});
    CHECK(vj_valuation(g, s, t, 2) == Valuation{1, {8, 3}, 3});
}

TEST_CASE("profile valuations match play-by-play recomputation") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 400; trial++) {
        ParityGame g = random_strict_game(rng, 2 + trial % 4, 3, 30);
        Strategy s = lowest_id_strategy(g, Owner::Even);
        Strategy t = lowest_id_strategy(g, Owner::Odd);
        // Randomize both strategies a little.
        for (int v = 0; v < g.size(); v++) {
            auto &c = g.owner[v] == Owner::Even ? s.choice[v] : t.choice[v];
            c = g.succ[v][rng() % g.succ[v].size()];
        }
        auto val = evaluate_profile(g, combine(g, s, t));
        for (int v = 0; v < g.size(); v++) {
            Play p = play(g, v, s, t);
            CHECK(val[v] == valuation_from_play(g, p));
            // The prefix really is the walk to the first dominant visit.
            int w = v;
            for (int u : p.prefix) {
                CHECK(u == w);
                w = combine(g, s, t)[w];
            }
        }
    }
}

TEST_CASE("best response with no Odd vertices is empty") {
    ParityGame g;
    int a = g.add(Owner::Even, 2);
    g.add_edge(a, a);
    Strategy t = best_response(g, lowest_id_strategy(g, Owner::Even));
    CHECK(t.choice == std::vector<int>{-1});
}

TEST_CASE("Odd escapes an even cycle to the sink") {
    // e (Odd) may loop with d (Even, high even priority) or escape to x.
    ParityGame g;
    g.add(Owner::Odd, 1, "x");
    g.add_edge(0, 0);
    int d = g.add(Owner::Even, 8, "d");
    int e = g.add(Owner::Odd, 3, "e");
    g.add_edge(d, e);
    g.add_edge(e, d);
    g.add_edge(e, 0);
    Strategy s = lowest_id_strategy(g, Owner::Even);
    Strategy t = best_response(g, s);
    CHECK(t.choice[e] == 0);
}

TEST_CASE("best response reaches the exhaustive envelope") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        ParityGame g = random_strict_game(rng, 2 + trial % 5, 3, 30);
        int odd = 0;
        for (int v = 0; v < g.size(); v++)
            if (g.owner[v] == Owner::Odd) odd++;
        if (odd > 3) continue;
        for_each_strategy(g, Owner::Even, [&](const Strategy &sigma) {
            std::vector<Valuation> val;
            Strategy tau = best_response(g, sigma, val);
            std::vector<Valuation> env = response_envelope(g, sigma);
            for (int v = 0; v < g.size(); v++) CHECK(val[v] == env[v]);
            // Optimality is per vertex: deviating at one Odd vertex never
            // helps Odd there.
            std::vector<int> base = combine(g, sigma, tau);
            for (int v = 0; v < g.size(); v++) {
                if (g.owner[v] != Owner::Odd) continue;
                for (int u : g.succ[v]) {
                    if (u == tau.choice[v]) continue;
                    std::vector<int> dev = base;
                    dev[v] = u;
                    CHECK(val_leq(val[v], evaluate_profile(g, dev)[v]));
                }
            }
            CHECK(best_response(g, sigma) == tau);
            return trial % 7 != 0; // full sweep on most games only
        });
    }
}

TEST_CASE("switch analysis: optimal strategies have no switchable edges") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 60; trial++) {
        ParityGame g = random_strict_game(rng, 2 + trial % 5, 3, 30);
        SIResult r = si_run(g, lowest_id_strategy(g, Owner::Even), 10000);
        REQUIRE(r.optimal);
        SwitchAnalysis sw = analyze_switches(g, r.sigma, r.val);
        CHECK(sw.selection.empty());
    }
}

TEST_CASE("switch analysis: single vertex picks the better target") {
    ParityGame g;
    g.add(Owner::Odd, 1, "x");
    g.add_edge(0, 0);
    int a = g.add(Owner::Even, 4, "a"); // even priority on the path: good
    g.add_edge(a, 0);
    int v = g.add(Owner::Even, 2, "v");
    g.add_edge(v, 0); // direct to sink
    g.add_edge(v, a); // via a, strictly better (collects the 4)
    Strategy s = lowest_id_strategy(g, Owner::Even);
    REQUIRE(s.choice[v] == 0);
    std::vector<Valuation> val;
    best_response(g, s, val);
    SwitchAnalysis sw = analyze_switches(g, s, val);
    REQUIRE(sw.selection.size() == 1);
    CHECK(sw.selection[0] == std::pair<int, int>{v, a});
    CHECK(sw.ties.empty());
}

TEST_CASE("apply_switches contract") {
    ParityGame g;
    g.add(Owner::Odd, 1, "x");
    g.add_edge(0, 0);
    int v = g.add(Owner::Even, 2);
    g.add_edge(v, 0);
    g.add_edge(v, v);
    Strategy s = lowest_id_strategy(g, Owner::Even);
    CHECK(apply_switches(g, s, {}) == s);
    Strategy s2 = apply_switches(g, s, {{v, v}});
    CHECK(s2.choice[v] == v);
    CHECK_THROWS(apply_switches(g, s, {{v, 0}, {v, v}}));
    CHECK_THROWS(apply_switches(g, s, {{0, 0}}));
}

TEST_CASE("si_run: zero iterations from an optimum, bounded iterations always") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; trial++) {
        ParityGame g = random_strict_game(rng, 2 + trial % 5, 3, 30);
        SIResult r = si_run(g, lowest_id_strategy(g, Owner::Even), 1 << 20);
        REQUIRE(r.optimal);
        CHECK(r.iterations <= count_strategies(g, Owner::Even));
        SIResult r2 = si_run(g, r.sigma, 1 << 20);
        CHECK(r2.iterations == 0);
        CHECK(r2.optimal);
    }
}

TEST_CASE("winning sets by valuation parity match the brute-force oracle") {
    ParityGame sink;
    sink.add(Owner::Odd, 1, "x");
    sink.add_edge(0, 0);
    SIResult r = si_run(sink, lowest_id_strategy(sink, Owner::Even), 10);
    CHECK(winning_sets_of(r.val).w1 == std::vector<int>{0});

    ParityGame loop;
    int a = loop.add(Owner::Even, 2);
    loop.add_edge(a, a);
    r = si_run(loop, lowest_id_strategy(loop, Owner::Even), 10);
    CHECK(winning_sets_of(r.val).w0 == std::vector<int>{0});

    std::mt19937 rng(43);
    for (int trial = 0; trial < 300; trial++) {
        ParityGame g = random_strict_game(rng, 2 + trial % 4, 2, 30);
        SIResult res = si_run(g, lowest_id_strategy(g, Owner::Even), 1 << 20);
        REQUIRE(res.optimal);
        WinningSets got = winning_sets_of(res.val);
        WinningSets want = brute_force_winning_sets(g);
        CHECK(got.w0 == want.w0);
        CHECK(got.w1 == want.w1);
    }
}

TEST_CASE("one-sink verdicts") {
    ParityGame g = sink_chain({3, 8});
    OneSinkVerdict v = is_one_sink(g);
    CHECK(v.structural);
    CHECK(v.sink == 0);
    CHECK(v.semantic == OneSinkVerdict::Semantic::Yes);

    // Even can hide in an even cycle instead of terminating.
    ParityGame h = sink_chain({3});
    int a = h.add(Owner::Even, 4);
    int b = h.add(Owner::Even, 2);
    h.add_edge(a, b);
    h.add_edge(b, a);
    h.add_edge(b, 0);
    v = is_one_sink(h);
    CHECK(v.structural);
    CHECK(v.semantic == OneSinkVerdict::Semantic::No);

    ParityGame z;
    int c = z.add(Owner::Even, 0);
    z.add_edge(c, c);
    CHECK(!is_one_sink(z).structural);

    ParityGame noloop;
    noloop.add(Owner::Odd, 1);
    noloop.add(Owner::Odd, 2);
    noloop.add_edge(0, 1);
    noloop.add_edge(1, 0);
    CHECK(!is_one_sink(noloop).structural);
}

TEST_CASE("simplified valuations on one-sink games") {
    ParityGame g = sink_chain({3});
    Strategy s = lowest_id_strategy(g, Owner::Even);
    CHECK(simplified_valuation(g, s, 0) == PrioritySet{});
    CHECK(simplified_valuation(g, s, 1) == PrioritySet{3});
    CHECK(maxdiff_sigma(g, s, 1, 0) == 3);

    // Non-terminating strategy refused.
    ParityGame h = sink_chain({3});
    int a = h.add(Owner::Even, 4);
    h.add_edge(a, a);
    h.add_edge(a, 0);
    Strategy sh = lowest_id_strategy(h, Owner::Even);
    sh.choice[a] = a;
    CHECK_THROWS(simplified_valuation(h, sh, a));
}

TEST_CASE("set-only engine replays the full engine on one-sink games") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 120; trial++) {
        ParityGame g = random_one_sink_game(rng, 2 + trial % 7, 3);
        SIResult full = si_run(g, lowest_id_strategy(g, Owner::Even), 1 << 20,
                               OrderMode::Full);
        SIResult sets = si_run(g, lowest_id_strategy(g, Owner::Even), 1 << 20,
                               OrderMode::SetOnly);
        REQUIRE(full.optimal);
        REQUIRE(sets.optimal);
        REQUIRE(full.trace.iters.size() == sets.trace.iters.size());
        for (size_t i = 0; i < full.trace.iters.size(); i++) {
            CHECK(full.trace.iters[i].switched == sets.trace.iters[i].switched);
            CHECK(full.trace.iters[i].ties == sets.trace.iters[i].ties);
        }
    }
}

TEST_CASE("trace replay and JSON round trip") {
    std::mt19937 rng(53);
    ParityGame g = random_one_sink_game(rng, 8, 3);
    SIResult r = si_run(g, lowest_id_strategy(g, Owner::Even), 1 << 20);
    REQUIRE(r.optimal);

    // Replay every prefix of the trace.
    std::vector<int> s = r.trace.sigma0;
    for (int t = 0; t <= (int)r.trace.iters.size(); t++) {
        CHECK(r.trace.strategy_at(t) == s);
        if (t < (int)r.trace.iters.size())
            for (const SwitchRec &w : r.trace.iters[t].switched) s[w.from] = w.to;
    }
    CHECK(r.trace.strategy_at((int)r.trace.iters.size()) == r.sigma.choice);

    std::ostringstream out;
    write_trace(out, r.trace);
    std::istringstream in(out.str());
    Trace t2 = read_trace(in);
    REQUIRE(t2.iters.size() == r.trace.iters.size());
    for (size_t i = 0; i < t2.iters.size(); i++) {
        CHECK(t2.iters[i].iteration == r.trace.iters[i].iteration);
        CHECK(t2.iters[i].switched == r.trace.iters[i].switched);
        CHECK(t2.iters[i].ties == r.trace.iters[i].ties);
    }
    std::ostringstream out2;
    write_trace(out2, t2);
    CHECK(out2.str() == out.str());
}

TEST_SUITE_END();
