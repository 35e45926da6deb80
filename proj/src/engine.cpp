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

#include "silab/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "silab/exhaustive.hpp"

namespace silab {

Order cmp_appeal(const Valuation &a, const Valuation &b, OrderMode mode) {
    if (mode == OrderMode::Full) return cmp_valuation(a, b);
    return cmp_priority_set(a.s, b.s);
}

namespace {

/* What a step onto u contributes to the path of a predecessor. A vertex
 * that heads its own cycle reports its loop length, but entering it ends
 * the path after one vertex; priorities are injective, so heading the own
 * cycle is visible as val.p == pri. */
Valuation route_value(const ParityGame &g, const std::vector<Valuation> &val,
                      int u) {
    if (val[u].p == g.pri[u]) return Valuation{val[u].p, {}, 1};
    return val[u];
}

} // namespace

SwitchAnalysis analyze_switches(const ParityGame &g, const Strategy &sigma,
                                const std::vector<Valuation> &val,
                                OrderMode mode) {
    SwitchAnalysis out;
    out.switchable.resize(g.size());
    for (int v = 0; v < g.size(); v++) {
        if (g.owner[v] != Owner::Even) continue;
        const Valuation cur = route_value(g, val, sigma.choice[v]);
        std::vector<int> &cand = out.switchable[v];
        for (int u : g.succ[v])
            if (cmp_appeal(cur, route_value(g, val, u), mode) == Order::Less)
                cand.push_back(u);
        if (cand.empty()) continue;
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

        int pick = cand[0];
        bool tie = false;
        for (size_t i = 1; i < cand.size(); i++) {
            Order c = cmp_appeal(route_value(g, val, pick),
                                 route_value(g, val, cand[i]), mode);
            if (c == Order::Less) {
                pick = cand[i];
                tie = false;
            } else if (c == Order::Equal) {
                tie = true; // pick stays: lowest id wins the tie
            }
        }
        out.selection.push_back({v, pick});
        if (tie) out.ties.push_back(v);
    }
    return out;
}

Strategy apply_switches(const ParityGame &g, const Strategy &sigma,
                        const std::vector<std::pair<int, int>> &switches) {
    Strategy out = sigma;
    std::vector<char> seen(g.size(), 0);
    for (auto [v, u] : switches) {
        if (g.owner[v] != Owner::Even)
            throw std::runtime_error("apply_switches: " + g.display(v) +
                                     " is not an Even vertex");
        if (seen[v])
            throw std::runtime_error("apply_switches: two switches at " +
                                     g.display(v));
        seen[v] = 1;
        if (!g.has_edge(v, u))
            throw std::runtime_error("apply_switches: no edge " + g.display(v) +
                                     " -> " + g.display(u));
        out.choice[v] = u;
    }
    return out;
}

std::vector<int> Trace::strategy_at(int t) const {
    if (t < 0 || t > (int)iters.size())
        throw std::runtime_error("trace: iteration out of range");
    int kf = std::min((int)(t / keyframe_every), (int)keyframes.size() - 1);
    std::vector<int> s = keyframes.empty() ? sigma0 : keyframes[kf];
    for (int i = kf * keyframe_every; i < t; i++)
        for (const SwitchRec &r : iters[i].switched) s[r.from] = r.to;
    return s;
}

SIResult si_run(const ParityGame &g, const Strategy &sigma0, long long budget,
                OrderMode mode, const std::function<bool(const SIContext &)> &hook) {
    g.require_strict("si_run");
    validate_strategy(g, sigma0);

    int sink = -1;
    if (mode == OrderMode::SetOnly) {
        OneSinkVerdict v = is_one_sink(g, 0);
        if (!v.structural)
            throw std::runtime_error("si_run: set-only order needs a one-sink game: " +
                                     v.reason);
        sink = v.sink;
    }

    SIResult res;
    res.sigma = sigma0;
    res.trace.sigma0 = sigma0.choice;
    res.trace.keyframes.push_back(sigma0.choice);

    std::vector<Valuation> prev;
    for (;;) {
        res.tau = best_response(g, res.sigma, res.val);
        if (mode == OrderMode::SetOnly && !is_terminating(g, sink, res.val))
            throw std::runtime_error(
                "si_run: set-only order hit a non-terminating strategy");

        if (!prev.empty()) {
            // Improvement invariant: nothing drops, something rises.
            bool strict = false;
            for (int v = 0; v < g.size(); v++) {
                Order c = cmp_appeal(prev[v], res.val[v], mode);
                if (c == Order::Greater)
                    throw std::runtime_error("si_run: valuation dropped at " +
                                             g.display(v));
                if (c == Order::Less) strict = true;
            }
            if (!strict)
                throw std::runtime_error("si_run: switch round did not improve");
        }

        SwitchAnalysis sw = analyze_switches(g, res.sigma, res.val, mode);
        if (hook) {
            SIContext ctx{(int)res.iterations, res.sigma, res.tau, res.val, sw};
            if (!hook(ctx)) {
                res.stopped_by_hook = true;
                break;
            }
        }
        if (sw.selection.empty()) {
            res.optimal = true;
            res.trace.reached_optimum = true;
            break;
        }
        if (res.iterations >= budget) {
            res.budget_exhausted = true;
            res.trace.budget_exhausted = true;
            break;
        }

        IterationRecord rec;
        rec.iteration = (int)res.iterations;
        for (auto [v, u] : sw.selection) rec.switched.push_back({v, u});
        rec.ties = sw.ties;
        res.trace.iters.push_back(std::move(rec));

        res.sigma = apply_switches(g, res.sigma, sw.selection);
        res.iterations++;
        if (res.iterations % res.trace.keyframe_every == 0)
            res.trace.keyframes.push_back(res.sigma.choice);
        prev = res.val;
    }
    return res;
}

WinningSets winning_sets_of(const std::vector<Valuation> &val) {
    WinningSets w;
    for (int v = 0; v < (int)val.size(); v++)
        (val[v].p % 2 == 0 ? w.w0 : w.w1).push_back(v);
    return w;
}

WinningSets winning_sets(const ParityGame &g, const Strategy &sigma_opt) {
    std::vector<Valuation> val;
    best_response(g, sigma_opt, val);
    return winning_sets_of(val);
}

bool is_terminating(const ParityGame &g, int sink,
                    const std::vector<Valuation> &val) {
    for (int v = 0; v < g.size(); v++)
        if (val[v].p != g.pri[sink]) return false;
    return true;
}

OneSinkVerdict is_one_sink(const ParityGame &g, long long semantic_limit) {
    OneSinkVerdict out;
    for (int v = 0; v < g.size(); v++)
        if (g.pri[v] < 1) {
            out.reason = "vertex " + g.display(v) + " has priority below 1";
            return out;
        }
    for (int v = 0; v < g.size(); v++) {
        if (g.pri[v] != 1) continue;
        bool selfloop_only = true;
        for (int u : g.succ[v])
            if (u != v) selfloop_only = false;
        if (selfloop_only) {
            out.sink = v;
            break;
        }
    }
    if (out.sink < 0) {
        out.reason = "no priority-1 vertex with only self-loops";
        return out;
    }
    if (!g.strict()) {
        out.reason = "duplicate priorities";
        return out;
    }
    out.structural = true;

    // Semantic part: every strategy without switchable edges must be
    // terminating. Only affordable by enumeration.
    long long count = 1;
    for (int v = 0; v < g.size(); v++) {
        if (g.owner[v] != Owner::Even) continue;
        count *= (long long)g.succ[v].size();
        if (count > semantic_limit) {
            out.semantic = OneSinkVerdict::Semantic::Unchecked;
            out.semantic_reason = "too many strategies to enumerate";
            return out;
        }
    }
    out.semantic = OneSinkVerdict::Semantic::Yes;
    for_each_strategy(g, Owner::Even, [&](const Strategy &sigma) {
        std::vector<Valuation> val;
        best_response(g, sigma, val);
        SwitchAnalysis sw = analyze_switches(g, sigma, val, OrderMode::Full);
        if (sw.selection.empty() && !is_terminating(g, out.sink, val)) {
            out.semantic = OneSinkVerdict::Semantic::No;
            out.semantic_reason = "an optimal strategy has a non-sink cycle";
            return false;
        }
        return true;
    });
    return out;
}

PrioritySet simplified_valuation(const ParityGame &g, const Strategy &sigma,
                                 int v) {
    OneSinkVerdict osv = is_one_sink(g, 0);
    if (!osv.structural)
        throw std::runtime_error("simplified_valuation: not a one-sink game: " +
                                 osv.reason);
    std::vector<Valuation> val;
    best_response(g, sigma, val);
    if (!is_terminating(g, osv.sink, val))
        throw std::runtime_error(
            "simplified_valuation: strategy is not terminating");
    return val[v].s;
}

priority_t maxdiff_sigma(const ParityGame &g, const Strategy &sigma, int v,
                         int u) {
    OneSinkVerdict osv = is_one_sink(g, 0);
    if (!osv.structural)
        throw std::runtime_error("maxdiff_sigma: not a one-sink game: " +
                                 osv.reason);
    std::vector<Valuation> val;
    best_response(g, sigma, val);
    if (!is_terminating(g, osv.sink, val))
        throw std::runtime_error("maxdiff_sigma: strategy is not terminating");
    return maxdiff(val[v].s, val[u].s);
}

} // namespace silab
