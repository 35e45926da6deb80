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

#include "silab/deciders.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace silab {

namespace {

constexpr int kMaxDisagreements = 32;

void check_edge(const ParityGame &g, int from, int to) {
    if (from < 0 || from >= g.size() || to < 0 || to >= g.size())
        throw std::runtime_error("edge endpoints out of range");
    if (g.owner[from] != Owner::Even)
        throw std::runtime_error("switch queries address Even's vertices");
    if (!g.has_edge(from, to)) throw std::runtime_error("no such edge");
}

/* Steps round coordinates along the schedule; done once the counter
 * range is spent. Full games visit m = 1..delay-1 per phase, clock
 * games m = 1..length per counter string including the reset step. */
struct Walker {
    const GadgetGame &gg;
    PhaseCoord c;
    bool done = false;
    long long eras = 1, phases = 0;

    explicit Walker(const GadgetGame &g) : gg(g) {
        if (gg.params.kind == GameKind::ClockOnly) {
            c.K = make_bits(gg.params.n, 0);
            c.m = 1;
        } else {
            c.B = gg.B0;
            c.K = make_bits(gg.params.n, 1);
            c.j = 0;
            c.m = 2; // built start strategies are second iterates
        }
    }

    void advance() {
        const GadgetParams &P = gg.params;
        if (P.kind == GameKind::ClockOnly) {
            if (c.m < P.length(c.K)) {
                ++c.m;
                return;
            }
            if (!lsz(c.K)) {
                done = true;
                return;
            }
            c.K = bits_increment(c.K);
            c.m = 1;
            ++eras;
            return;
        }
        if (c.m + 1 < P.delay(c.j, c.K)) {
            ++c.m;
            return;
        }
        c.B = stored_step(gg.circuit, c.B);
        ++phases;
        if (c.j == 0) {
            c.j = 1;
            c.m = 1;
            return;
        }
        if (!lsz(c.K)) {
            done = true;
            return;
        }
        c.K = bits_increment(c.K);
        c.j = 0;
        c.m = 1;
        ++eras;
    }
};

long long run_budget(long long horizon) {
    return horizon > (1LL << 60) ? horizon : horizon + 2;
}

} // namespace

const char *answer_name(Answer a) {
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "inconclusive";
    }
}

long long default_budget(const GadgetParams &P) {
    int W = P.kind == GameKind::OptStrat ? P.n + 1 : P.n;
    long long total = 0;
    for (unsigned long long v = 1; v < (1ULL << W); ++v)
        total += P.length(make_bits(W, v));
    return 3 * total;
}

Verdict edge_switch(const ParityGame &g, const Strategy &sigma0, int from,
                    int to, long long budget) {
    check_edge(g, from, to);
    Verdict verdict;
    bool stop_next = false;
    auto hook = [&](const SIContext &ctx) -> bool {
        if (stop_next) return false;
        if (ctx.switches.selected(from, to)) {
            verdict.answer = Answer::Yes;
            verdict.witness_iteration = ctx.iteration;
            stop_next = true; // one more round puts the switch on the trace
        }
        return true;
    };
    SIResult res = si_run(g, sigma0, budget, OrderMode::Full, hook);
    verdict.iterations = res.iterations;
    verdict.fixpoint = res.optimal;
    verdict.budget_exhausted = res.budget_exhausted;
    if (verdict.answer != Answer::Yes && res.optimal)
        verdict.answer = Answer::No;
    return verdict;
}

Verdict optimal_strategy_uses(const ParityGame &g, const Strategy &sigma0,
                              int from, int to, long long budget) {
    check_edge(g, from, to);
    SIResult res = si_run(g, sigma0, budget, OrderMode::Full);
    Verdict verdict;
    verdict.iterations = res.iterations;
    verdict.fixpoint = res.optimal;
    verdict.budget_exhausted = res.budget_exhausted;
    if (res.optimal) {
        verdict.answer =
            res.sigma.choice[from] == to ? Answer::Yes : Answer::No;
        verdict.witness_iteration = res.iterations;
    }
    return verdict;
}

TrajectoryReport check_trajectory(const GadgetGame &gg, const Strategy &sigma0,
                                  const Predictor &predictor,
                                  long long horizon) {
    if (gg.params.kind == GameKind::OptStrat)
        throw std::runtime_error(
            "trajectory prediction covers counter and two-clock games only");
    bool clock = gg.params.kind == GameKind::ClockOnly;
    TrajectoryReport rep;
    Walker w(gg);
    std::vector<Valuation> prev_val;

    auto hook = [&](const SIContext &ctx) -> bool {
        if (w.done) {
            rep.coords_exhausted = true;
            return false;
        }
        if (rep.iterations_checked >= horizon) {
            rep.reached_horizon = true;
            return false;
        }
        OrnextResolver orn = [&](int o, int a1, int a2) -> int {
            if (prev_val.empty())
                throw std::runtime_error("two true arms on the first round at " +
                                         gg.game.display(o));
            Order c = cmp_valuation(prev_val[a1], prev_val[a2]);
            if (c == Order::Equal)
                throw std::runtime_error("true arms tie at " +
                                         gg.game.display(o));
            return c == Order::Greater ? a1 : a2;
        };
        PredictedStrategy pred =
            predictor ? predictor(w.c, orn)
                      : predict(gg, w.c.B, w.c.K, clock ? 0 : w.c.j, w.c.m, orn);
        PredictedStrategy mu =
            predict_br(gg, w.c.B, w.c.K, clock ? 0 : w.c.j, w.c.m);
        auto note = [&](int v, int expected, int actual, Owner side) {
            rep.ok = false;
            if ((int)rep.disagreements.size() < kMaxDisagreements)
                rep.disagreements.push_back(
                    {rep.iterations_checked, v, expected, actual, side, w.c});
        };
        for (int v = 0; v < gg.game.size(); ++v) {
            if (gg.game.owner[v] == Owner::Even) {
                if (!pred.defined(v)) continue;
                ++rep.comparisons;
                if (ctx.sigma.choice[v] != pred.choice[v])
                    note(v, pred.choice[v], ctx.sigma.choice[v], Owner::Even);
            } else {
                if (!mu.defined(v)) continue;
                ++rep.comparisons;
                if (ctx.tau.choice[v] != mu.choice[v])
                    note(v, mu.choice[v], ctx.tau.choice[v], Owner::Odd);
            }
        }
        rep.ties += (long long)ctx.switches.ties.size();
        ++rep.iterations_checked;
        prev_val = ctx.val;
        w.advance();
        return rep.ok || (int)rep.disagreements.size() < kMaxDisagreements;
    };

    SIResult res =
        si_run(gg.game, sigma0, run_budget(horizon), OrderMode::Full, hook);
    rep.reached_fixpoint = res.optimal;
    rep.eras = w.eras;
    rep.phases = w.phases;
    return rep;
}

TrajectoryReport check_trajectory(const GadgetGame &gg, const Strategy &sigma0,
                                  long long horizon) {
    return check_trajectory(gg, sigma0, Predictor{}, horizon);
}

namespace {

enum LemmaIdx {
    kClockRails = 0,
    kCrossClockRails,
    kEscapeNoCycle,
    kGateOutputEarly,
    kGateOutputEval,
    kLemmaCount
};

struct LemmaChecker {
    const GadgetGame &gg;
    LemmaReport &rep;
    long long round = 0;
    PhaseCoord c;

    LemmaChecker(const GadgetGame &g, LemmaReport &r) : gg(g), rep(r) {}

    void fail(int idx, const std::string &what) {
        LemmaTally &t = rep.lemmas[idx];
        ++t.failures;
        rep.ok = false;
        if (t.first_failure.empty()) {
            std::ostringstream os;
            os << "round " << round << " (j=" << c.j << " m=" << c.m
               << "): " << what;
            t.first_failure = os.str();
        }
    }

    void expect(int idx, bool okay, const std::string &what) {
        ++rep.lemmas[idx].checks;
        if (!okay) fail(idx, what);
    }

    bool below(const std::vector<Valuation> &val, int a, int b) const {
        return cmp_valuation(val[a], val[b]) == Order::Less;
    }

    /* Largest priority the two prefix sets disagree on; -1 when equal. */
    priority_t gap(const std::vector<Valuation> &val, int a, int b) const {
        if (val[a].s == val[b].s) return -1;
        return maxdiff(val[a].s, val[b].s);
    }

    void clock_rails(const std::vector<Valuation> &val, int jj,
                     const BitString &KK, int mm) {
        long long V = gg.game.size();
        int r = gg.id(Fam::ClkR, jj), s = gg.id(Fam::ClkS, jj);
        bool order = mm == gg.params.length(KK) - 1 ? below(val, r, s)
                                                    : below(val, s, r);
        expect(kClockRails, order,
               "rest and run rails out of order on side " + std::to_string(jj));
        expect(kClockRails, gap(val, s, r) >= pp({7, 0, 0, 0, 0}, V),
               "rail gap below the anchor band on side " + std::to_string(jj));
    }

    void cross_clock(const std::vector<Valuation> &val) {
        int j = c.j;
        int rj = gg.id(Fam::ClkR, j), sj = gg.id(Fam::ClkS, j);
        int ro = gg.id(Fam::ClkR, 1 - j), so = gg.id(Fam::ClkS, 1 - j);
        bool okay;
        if (c.m == gg.params.delay(j, c.K) - 1)
            okay = below(val, ro, rj) && below(val, rj, so);
        else
            okay = below(val, ro, sj) && below(val, sj, rj);
        expect(kCrossClockRails, okay, "run rail misplaced between rival rails");
    }

    void escape_no_cycle(const std::vector<Valuation> &val,
                         const Strategy &sigma, const Strategy &tau) {
        (void)val;
        for (int e = 0; e < gg.game.size(); ++e) {
            const VertexKey &k = gg.key[e];
            Fam df;
            if (k.fam == Fam::ClkE) df = Fam::ClkD;
            else if (k.fam == Fam::NotE) df = Fam::NotD;
            else if (k.fam == Fam::IoE) df = Fam::IoD;
            else continue;
            int d = gg.id(df, k.j, k.i);
            if (sigma.choice[d] != e) continue;
            expect(kEscapeNoCycle, tau.choice[e] != d,
                   "escape answered back at " + gg.game.display(e));
        }
    }

    void gate_outputs(const std::vector<Valuation> &val,
                      const std::vector<int> &evb,
                      const std::vector<int> &depth) {
        const CircuitSpec &cir = gg.circuit;
        long long V = gg.game.size();
        int j = c.j, r = gg.id(Fam::ClkR, j);
        for (int i = cir.n + 1; i <= gg.params.ck; ++i) {
            Fam of = cir.at(i).kind == GateKind::Or ? Fam::OrO : Fam::NotO;
            int o = gg.id(of, j, i);
            if (c.m <= 2) {
                expect(kGateOutputEarly, below(val, o, r),
                       "fresh gate output above the run rail at " +
                           gg.game.display(o));
                continue;
            }
            if (c.m <= depth[i] + 2 || evb[i] == 0) {
                expect(kGateOutputEval, below(val, o, r),
                       "unsettled gate output above the run rail at " +
                           gg.game.display(o));
                continue;
            }
            priority_t d = gap(val, r, o);
            bool okay = below(val, r, o) && d >= pp({6, 0, 0, 0, 0}, V) &&
                        d <= pp({6, i, 1, j, 0}, V);
            expect(kGateOutputEval, okay,
                   "settled gate output without a bracketed gap at " +
                       gg.game.display(o));
        }
    }
};

} // namespace

LemmaReport check_appendix_lemmas(const GadgetGame &gg, const Strategy &sigma0,
                                  long long horizon) {
    if (gg.params.kind != GameKind::Full)
        throw std::runtime_error("lemma checks cover two-clock games only");
    LemmaReport rep;
    rep.lemmas.resize(kLemmaCount);
    rep.lemmas[kClockRails].name = "clock-rails";
    rep.lemmas[kCrossClockRails].name = "cross-clock-rails";
    rep.lemmas[kEscapeNoCycle].name = "escape-no-cycle";
    rep.lemmas[kGateOutputEarly].name = "gate-output-early";
    rep.lemmas[kGateOutputEval].name = "gate-output-eval";

    Walker w(gg);
    LemmaChecker chk(gg, rep);
    const GadgetParams &P = gg.params;

    auto hook = [&](const SIContext &ctx) -> bool {
        if (w.done) {
            rep.coords_exhausted = true;
            return false;
        }
        if (rep.iterations_checked >= horizon) {
            rep.reached_horizon = true;
            return false;
        }
        chk.round = rep.iterations_checked;
        chk.c = w.c;

        chk.clock_rails(ctx.val, w.c.j, w.c.K, w.c.m);
        BitString ock = oc(w.c.K, w.c.j);
        chk.clock_rails(ctx.val, 1 - w.c.j, ock,
                        w.c.m + P.delay(1 - w.c.j, ock));
        chk.cross_clock(ctx.val);
        chk.escape_no_cycle(ctx.val, ctx.sigma, ctx.tau);
        chk.gate_outputs(ctx.val, eval_all(gg.circuit, w.c.B),
                         gg.circuit.depths());

        ++rep.iterations_checked;
        w.advance();
        return true;
    };

    SIResult res =
        si_run(gg.game, sigma0, run_budget(horizon), OrderMode::Full, hook);
    rep.reached_fixpoint = res.optimal;
    return rep;
}

ThirdClockReport optstrat_report(const GadgetGame &gg, const Strategy &sigma0,
                                 long long budget) {
    if (gg.params.kind != GameKind::OptStrat)
        throw std::runtime_error("third clock reports need the optimal "
                                 "strategy variant");
    const GadgetParams &P = gg.params;
    int W = P.n + 1;
    int d2 = gg.id(Fam::ClkD, 2, W);
    int e2 = gg.id(Fam::ClkE, 2, W);
    int f2 = gg.id(Fam::ClkF, 2, W);
    std::vector<int> relays;
    for (int u = 1; u <= P.lane + 3; ++u)
        relays.push_back(gg.id(Fam::Relay, 0, u));

    ThirdClockReport rep;
    std::set<unsigned long long> patterns;
    auto decode = [&](const Strategy &sig) {
        unsigned long long v = 0;
        for (int i = 1; i <= P.n; ++i)
            if (sig.choice[gg.id(Fam::ClkG, 2, i)] == gg.id(Fam::ClkF, 2, i))
                v |= 1ULL << (i - 1);
        return v;
    };
    auto hook = [&](const SIContext &ctx) -> bool {
        if (rep.flip_iteration < 0) {
            if (ctx.sigma.choice[d2] == e2)
                rep.flip_iteration = ctx.iteration;
            else
                patterns.insert(decode(ctx.sigma));
        }
        bool home = true;
        for (int v : relays) home = home && ctx.sigma.choice[v] == f2;
        if (home && rep.relays_home < 0) rep.relays_home = ctx.iteration;
        if (rep.relays_home >= 0 && !home) rep.relays_stayed = false;
        return true;
    };
    SIResult res = si_run(gg.game, sigma0, budget, OrderMode::Full, hook);
    rep.strings_seen = (long long)patterns.size();
    rep.verdict.iterations = res.iterations;
    rep.verdict.fixpoint = res.optimal;
    rep.verdict.budget_exhausted = res.budget_exhausted;
    if (res.optimal) {
        rep.verdict.answer =
            res.sigma.choice[gg.watched_from] == gg.watched_to ? Answer::Yes
                                                               : Answer::No;
        rep.verdict.witness_iteration = res.iterations;
    }
    return rep;
}

} // namespace silab
