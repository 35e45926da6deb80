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

#include "silab/engine.hpp"
#include "silab/predict.hpp"

namespace silab {

enum class Answer { Yes, No, Inconclusive };

/**
 * Outcome of a run-based decision. A no-answer is only issued when the
 * run reached an optimal strategy; running out of budget first yields
 * Inconclusive with budget_exhausted set, never a no.
 */
struct Verdict {
    Answer answer = Answer::Inconclusive;
    long long witness_iteration = -1; // round that proves a yes
    long long iterations = 0;         // rounds executed
    bool fixpoint = false;            // an optimal strategy was reached
    bool budget_exhausted = false;
};

const char *answer_name(Answer a);

/* Round budget covering three full counter sweeps of the game. */
long long default_budget(const GadgetParams &P);

/**
 * Does greedy all-switches improvement from sigma0 ever put (from, to)
 * into a round's switch set? Yes-verdicts carry the round index, and
 * the run continues one round further so the trace replays the switch.
 * The queried vertex must be Even's with `to` among its successors.
 */
Verdict edge_switch(const ParityGame &g, const Strategy &sigma0, int from,
                    int to, long long budget);

/**
 * Does the optimal strategy reached from sigma0 use edge (from, to)?
 * Runs to the fixpoint; witness_iteration reports the round count.
 */
Verdict optimal_strategy_uses(const ParityGame &g, const Strategy &sigma0,
                              int from, int to, long long budget);

/**
 * Schedule coordinates of one improvement round: computing side j runs
 * iterate m of counter string K with store contents B. Clock-only games
 * use K and m alone, with m = length(K) as the reset step.
 */
struct PhaseCoord {
    BitString B, K;
    int j = 0, m = 1;
};

struct Disagreement {
    long long iteration = 0;
    int vertex = -1;
    int expected = -1;
    int actual = -1;
    Owner side = Owner::Even;
    PhaseCoord at;
};

/**
 * Outcome of walking a run against the predicted schedule. A
 * disagreement is data, not an error: the report carries the first
 * ones found (capped) together with their coordinates.
 */
struct TrajectoryReport {
    bool ok = true;
    long long iterations_checked = 0;
    long long comparisons = 0;
    long long ties = 0;
    long long eras = 0;   // counter strings entered
    long long phases = 0; // phase boundaries crossed
    bool reached_fixpoint = false;
    bool reached_horizon = false;
    bool coords_exhausted = false; // run outlived the counter range
    std::vector<Disagreement> disagreements;
};

/* Replacement prediction, fed the coordinates of each round. */
using Predictor =
    std::function<PredictedStrategy(const PhaseCoord &, const OrnextResolver &)>;

/**
 * Runs improvement from sigma0 and compares every round against the
 * schedule: Even strategies against the predicted iterate, Odd best
 * responses against the predicted response, on the vertices where the
 * prediction is defined. Two-way Or choices resolve against the
 * previous round's valuations. Checks at most `horizon` rounds.
 */
TrajectoryReport check_trajectory(const GadgetGame &gg, const Strategy &sigma0,
                                  const Predictor &predictor, long long horizon);
TrajectoryReport check_trajectory(const GadgetGame &gg, const Strategy &sigma0,
                                  long long horizon);

struct LemmaTally {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;
};

struct LemmaReport {
    bool ok = true;
    long long iterations_checked = 0;
    bool reached_fixpoint = false;
    bool reached_horizon = false;
    bool coords_exhausted = false;
    std::vector<LemmaTally> lemmas;
};

/**
 * Runs improvement from sigma0 and checks the valuation-order facts the
 * schedule rests on, at every visited strategy:
 *   clock-rails: each side's rest rail beats its run rail except on the
 *     round before its reset, with a top-band certificate gap;
 *   cross-clock-rails: the computing run rail sits between the resting
 *     rails, flipping on the round before the handoff;
 *   escape-no-cycle: no chosen d-escape is answered back by Odd;
 *   gate-output-early / gate-output-eval: a gate's output state stays
 *     below the run rail until its inputs settle true, then beats it
 *     with a gap bracketed in the store band.
 */
LemmaReport check_appendix_lemmas(const GadgetGame &gg, const Strategy &sigma0,
                                  long long horizon);

/**
 * Full run on an optimal-strategy variant, watching the third clock:
 * when its top bit raises, every relay must reroute to the top escape
 * within one round and stay there; the watched edge's final verdict is
 * read off the fixpoint.
 */
struct ThirdClockReport {
    Verdict verdict;               // watched edge used at the fixpoint
    long long flip_iteration = -1; // top counter bit raised
    long long relays_home = -1;    // every relay on the top escape
    bool relays_stayed = true;     // and none ever left it again
    long long strings_seen = 0;    // distinct low-bit patterns before the flip
};

ThirdClockReport optstrat_report(const GadgetGame &gg, const Strategy &sigma0,
                                 long long budget);

} // namespace silab
