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

#include <cstdint>
#include <functional>

#include "silab/construction.hpp"

namespace silab {

/**
 * Partial positional strategy predicted for one improvement step:
 * choice[v] = -1 where the prediction leaves the vertex open (the
 * resting circuit's gate gadgets, and the computing store's d-row at
 * m = 1, whose value depends on the previous phase).
 */
struct PredictedStrategy {
    Owner side = Owner::Even;
    std::vector<int> choice;
    BitString B, K;
    int j = 0, m = 0;

    bool defined(int v) const { return choice[v] >= 0; }
    int defined_count() const;
};

/**
 * Two-way choice left to valuation comparison: an Or vertex whose arms
 * are both true routes to its currently better arm. The resolver gets
 * (vertex, arm1, arm2) and returns the chosen arm; absent resolver =
 * error if such a choice arises.
 */
using OrnextResolver = std::function<int(int, int, int)>;

/**
 * The Even strategy predicted for iterate m of phase (B, K, j);
 * 1 <= m <= delay(j, K) on circuit games. Clock-only games take
 * 1 <= m <= length(K), where m = length(K) is the reset step.
 */
PredictedStrategy predict(const GadgetGame &g, const BitString &B,
                          const BitString &K, int j, int m,
                          const OrnextResolver &ornext = {});

/* Odd's predicted best response at the same coordinates. */
PredictedStrategy predict_br(const GadgetGame &g, const BitString &B,
                             const BitString &K, int j, int m);

/* Store contents after one computation: bit b holds the negation of
 * compiled output b, which is the original circuit applied to B. */
BitString stored_step(const CircuitSpec &c, const BitString &B);

enum class FillMode { LowestId, Seeded };

/* Total strategy: defined choices kept, open vertices filled lowest-id
 * or uniformly from a seeded generator. */
Strategy complete(const GadgetGame &g, const PredictedStrategy &p,
                  FillMode mode, uint64_t seed);

} // namespace silab
