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

#include "silab/exhaustive.hpp"

#include <queue>

namespace silab {

long long count_strategies(const ParityGame &g, Owner side) {
    long long n = 1;
    for (int v = 0; v < g.size(); v++)
        if (g.owner[v] == side) n *= (long long)g.succ[v].size();
    return n;
}

namespace {

/* Vertices reachable from the seed set along the given edge filter. */
std::vector<char> reachable(const ParityGame &g, const Strategy *sigma,
                            const std::vector<char> &seed,
                            priority_t pri_cap) {
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    for (int v = 0; v < g.size(); v++)
        if (seed[v] && g.pri[v] <= pri_cap) {
            seen[v] = 1;
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        auto push = [&](int u) {
            if (g.pri[u] <= pri_cap && !seen[u]) {
                seen[u] = 1;
                q.push(u);
            }
        };
        if (sigma && g.owner[v] == Owner::Even)
            push(sigma->choice[v]);
        else
            for (int u : g.succ[v]) push(u);
    }
    return seen;
}

} // namespace

std::vector<char> odd_wins_under(const ParityGame &g, const Strategy &sigma) {
    std::vector<char> wins(g.size(), 0);
    std::vector<char> one(g.size(), 0);
    for (int c = 0; c < g.size(); c++) {
        if (g.pri[c] % 2 == 0) continue;
        if (wins[c]) continue;
        // A loop through c that never tops pri(c): c must see itself
        // through the subgraph capped at pri(c).
        std::fill(one.begin(), one.end(), 0);
        bool closes = false;
        if (g.owner[c] == Owner::Even) {
            one[sigma.choice[c]] = 1;
        } else {
            for (int u : g.succ[c]) one[u] = 1;
        }
        std::vector<char> loop = reachable(g, &sigma, one, g.pri[c]);
        closes = loop[c];
        if (!closes) continue;
        // Everything that reaches c (no priority cap on the approach)
        // can be steered into that loop.
        std::vector<char> to_c(g.size(), 0);
        to_c[c] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int v = 0; v < g.size(); v++) {
                if (to_c[v]) continue;
                bool hit = false;
                if (g.owner[v] == Owner::Even) {
                    hit = to_c[sigma.choice[v]];
                } else {
                    for (int u : g.succ[v])
                        if (to_c[u]) hit = true;
                }
                if (hit) {
                    to_c[v] = 1;
                    grew = true;
                }
            }
        }
        for (int v = 0; v < g.size(); v++)
            if (to_c[v]) wins[v] = 1;
    }
    return wins;
}

WinningSets brute_force_winning_sets(const ParityGame &g) {
    g.validate();
    std::vector<char> even_can_win(g.size(), 0);
    for_each_strategy(g, Owner::Even, [&](const Strategy &sigma) {
        std::vector<char> lost = odd_wins_under(g, sigma);
        for (int v = 0; v < g.size(); v++)
            if (!lost[v]) even_can_win[v] = 1;
        return true;
    });
    WinningSets w;
    for (int v = 0; v < g.size(); v++)
        (even_can_win[v] ? w.w0 : w.w1).push_back(v);
    return w;
}

std::vector<Valuation> response_envelope(const ParityGame &g,
                                         const Strategy &sigma) {
    g.require_strict("response_envelope");
    std::vector<Valuation> env;
    for_each_strategy(g, Owner::Odd, [&](const Strategy &tau) {
        std::vector<Valuation> val = evaluate_profile(g, combine(g, sigma, tau));
        if (env.empty()) {
            env = val;
        } else {
            for (int v = 0; v < g.size(); v++)
                if (val_less(val[v], env[v])) env[v] = val[v];
        }
        return true;
    });
    return env;
}

} // namespace silab
