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

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "silab/valuation.hpp"

namespace silab {

/**
 * Which order drives the Even player's switching decisions. Full uses the
 * (p, s, d) valuation order. SetOnly compares the s components alone; it
 * is only sound on one-sink games where every encountered strategy is
 * terminating, and the engine refuses to continue otherwise.
 */
enum class OrderMode { Full, SetOnly };

Order cmp_appeal(const Valuation &a, const Valuation &b, OrderMode mode);

/**
 * Everything the greedy all-switches rule derives from one strategy:
 * per-vertex switchable targets, the most appealing target per vertex,
 * and the vertices whose top appeal was shared by more than one target.
 */
struct SwitchAnalysis {
    std::vector<std::vector<int>> switchable; // per vertex, ascending targets
    std::vector<std::pair<int, int>> selection; // (vertex, chosen target)
    std::vector<int> ties;

    bool selected(int v, int u) const {
        for (auto &p : selection)
            if (p.first == v && p.second == u) return true;
        return false;
    }
};

SwitchAnalysis analyze_switches(const ParityGame &g, const Strategy &sigma,
                                const std::vector<Valuation> &val,
                                OrderMode mode = OrderMode::Full);

/* sigma with the given per-vertex switches applied; at most one per vertex. */
Strategy apply_switches(const ParityGame &g, const Strategy &sigma,
                        const std::vector<std::pair<int, int>> &switches);

struct SwitchRec {
    int from = -1;
    int to = -1;
    bool operator==(const SwitchRec &o) const {
        return from == o.from && to == o.to;
    }
};

struct IterationRecord {
    int iteration = 0;
    std::vector<SwitchRec> switched; // ascending by vertex
    std::vector<int> ties;
};

/**
 * Replayable record of a strategy improvement run: the initial strategy,
 * one record per executed switch round, and periodic full snapshots so
 * that any intermediate strategy can be reconstructed cheaply.
 */
struct Trace {
    std::vector<int> sigma0;
    std::vector<IterationRecord> iters;
    int keyframe_every = 64;
    std::vector<std::vector<int>> keyframes; // at iterations 0, k, 2k, ...
    bool reached_optimum = false;
    bool budget_exhausted = false;

    /* Even strategy before iteration t was applied (t <= iters.size()). */
    std::vector<int> strategy_at(int t) const;
};

struct SIContext {
    int iteration;
    const Strategy &sigma;
    const Strategy &tau;
    const std::vector<Valuation> &val;
    const SwitchAnalysis &switches;
};

struct SIResult {
    Trace trace;
    Strategy sigma; // last strategy reached
    Strategy tau;   // its best response
    std::vector<Valuation> val;
    bool optimal = false;
    bool budget_exhausted = false;
    bool stopped_by_hook = false;
    long long iterations = 0;
};

/**
 * Greedy all-switches strategy improvement from sigma0. Each round
 * computes the best response, checks that no valuation dropped since the
 * previous round (a drop is a hard error), and switches every vertex
 * with a switchable edge to its most appealing target. Stops at a
 * strategy without switchable edges, at the budget, or when the hook
 * returns false.
 */
SIResult si_run(const ParityGame &g, const Strategy &sigma0, long long budget,
                OrderMode mode = OrderMode::Full,
                const std::function<bool(const SIContext &)> &hook = {});

struct WinningSets {
    std::vector<int> w0, w1; // ascending vertex ids, disjoint cover
};

/* Partition by the parity of the dominant priority under (sigma, br). */
WinningSets winning_sets(const ParityGame &g, const Strategy &sigma_opt);
WinningSets winning_sets_of(const std::vector<Valuation> &val);

struct OneSinkVerdict {
    bool structural = false;
    int sink = -1;
    std::string reason;
    enum class Semantic { Yes, No, Unchecked } semantic = Semantic::Unchecked;
    std::string semantic_reason;
};

/**
 * Structural check: some vertex has priority 1 and only self-loops.
 * Semantic check (small games only): every strategy without switchable
 * edges routes every play into the sink.
 */
OneSinkVerdict is_one_sink(const ParityGame &g,
                           long long semantic_limit = 100000);

/* True iff every play under (sigma, tau) ends in the sink's self-loop. */
bool is_terminating(const ParityGame &g, int sink,
                    const std::vector<Valuation> &val);

/**
 * S-component of the valuation of v under (sigma, best response).
 * Refuses non-terminating sigma on one-sink games.
 */
PrioritySet simplified_valuation(const ParityGame &g, const Strategy &sigma,
                                 int v);

/* maxdiff of the simplified valuations of v and u under (sigma, br). */
priority_t maxdiff_sigma(const ParityGame &g, const Strategy &sigma, int v,
                         int u);

} // namespace silab
