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

#include <vector>

#include "silab/game.hpp"

namespace silab {

/**
 * The eventually-cyclic play under a pair of positional strategies,
 * split at the first visit to the cycle's dominant vertex: the prefix
 * runs from the start vertex up to and including that vertex, the cycle
 * starts there.
 */
struct Play {
    std::vector<int> prefix; // ends at the dominant vertex
    std::vector<int> cycle;  // starts at the dominant vertex
};

Play play(const ParityGame &g, int v0, const Strategy &sigma,
          const Strategy &tau);

/**
 * Valuations of every vertex under the successor function next
 * (one choice per vertex). Strict game required: the cycle's dominant
 * vertex must be unique for the prefix split to be well defined.
 */
std::vector<Valuation> evaluate_profile(const ParityGame &g,
                                        const std::vector<int> &next);

Valuation vj_valuation(const ParityGame &g, const Strategy &sigma,
                       const Strategy &tau, int v);

/**
 * Odd's best response to sigma: the Odd strategy minimizing every
 * vertex's valuation in the reward order, computed by Odd-side strategy
 * iteration. Among equally bad successors the lowest id is chosen, so
 * the result is deterministic.
 */
Strategy best_response(const ParityGame &g, const Strategy &sigma);

/* best_response plus the profile valuations it settles on. */
Strategy best_response(const ParityGame &g, const Strategy &sigma,
                       std::vector<Valuation> &vals_out);

} // namespace silab
