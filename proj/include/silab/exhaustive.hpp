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

#include <algorithm>
#include <vector>

#include "silab/engine.hpp"

namespace silab {

/**
 * Brute-force reference implementations. Deliberately independent of the
 * strategy improvement engine: they work from definitions, by
 * enumeration, and exist so the engine has something honest to be tested
 * against.
 */

/* Number of positional strategies of the given side. */
long long count_strategies(const ParityGame &g, Owner side);

/**
 * Run f on every positional strategy of the given side, successor
 * choices ascending, first vertex cycling fastest. f returns false to
 * stop; the function returns false iff stopped.
 */
template <class F>
bool for_each_strategy(const ParityGame &g, Owner side, F &&f) {
    std::vector<int> owned;
    for (int v = 0; v < g.size(); v++)
        if (g.owner[v] == side) owned.push_back(v);
    std::vector<std::vector<int>> opts(owned.size());
    for (size_t i = 0; i < owned.size(); i++) {
        opts[i] = g.succ[owned[i]];
        std::sort(opts[i].begin(), opts[i].end());
        opts[i].erase(std::unique(opts[i].begin(), opts[i].end()), opts[i].end());
    }
    Strategy s;
    s.side = side;
    s.choice.assign(g.size(), -1);
    std::vector<size_t> idx(owned.size(), 0);
    for (;;) {
        for (size_t i = 0; i < owned.size(); i++)
            s.choice[owned[i]] = opts[i][idx[i]];
        if (!f((const Strategy &)s)) return false;
        size_t i = 0;
        while (i < owned.size() && ++idx[i] == opts[i].size()) idx[i++] = 0;
        if (i == owned.size()) return true;
    }
}

/**
 * With sigma's choices frozen, can Odd walk from v into a cycle whose
 * top priority is odd? Answered straight from the definition: for each
 * odd-priority vertex c, look for a lasso through c using only vertices
 * with priority below pri(c) on the loop.
 */
std::vector<char> odd_wins_under(const ParityGame &g, const Strategy &sigma);

/**
 * Winning sets from the definition of winning, no valuations involved:
 * Even wins at v iff some Even strategy denies Odd every reachable
 * odd-topped cycle.
 */
WinningSets brute_force_winning_sets(const ParityGame &g);

/**
 * Pointwise minimum of the valuation vector over all Odd strategies.
 * A correct best response must attain this envelope everywhere.
 */
std::vector<Valuation> response_envelope(const ParityGame &g,
                                         const Strategy &sigma);

} // namespace silab
