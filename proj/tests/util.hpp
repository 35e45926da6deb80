/* Shared test helpers: deterministic random game generators. */

#pragma once

#include <random>
#include <vector>

#include "silab/game.hpp"

namespace testutil {

using namespace silab;

/**
 * Random strict game: injective priorities, arbitrary edges, every vertex
 * at least one successor. Cycles of both parities welcome.
 */
inline ParityGame random_strict_game(std::mt19937 &rng, int n, int max_deg,
                                     priority_t pri_hi) {
    ParityGame g;
    std::vector<priority_t> pool;
    for (priority_t p = 1; p <= pri_hi; p++) pool.push_back(p);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int v = 0; v < n; v++)
        g.add(rng() % 2 ? Owner::Odd : Owner::Even, pool[v]);
    std::uniform_int_distribution<int> dv(0, n - 1);
    for (int v = 0; v < n; v++) {
        int deg = 1 + (int)(rng() % max_deg);
        std::vector<char> used(n, 0);
        for (int i = 0; i < deg; i++) {
            int u = dv(rng);
            if (used[u]) continue;
            used[u] = 1;
            g.add_edge(v, u);
        }
        if (g.succ[v].empty()) g.add_edge(v, dv(rng));
    }
    return g;
}

/**
 * Random one-sink game by construction: vertex 0 is the priority-1
 * self-loop sink and all other edges point strictly downward in vertex
 * id, so the sink loop is the only cycle and every strategy terminates.
 */
inline ParityGame random_one_sink_game(std::mt19937 &rng, int n, int max_deg,
                                       bool binary_even = false) {
    ParityGame g;
    std::vector<priority_t> pool;
    for (priority_t p = 2; p <= 3 * (priority_t)n; p++) pool.push_back(p);
    std::shuffle(pool.begin(), pool.end(), rng);
    g.add(Owner::Odd, 1, "x");
    g.add_edge(0, 0);
    for (int v = 1; v < n; v++)
        g.add(rng() % 2 ? Owner::Odd : Owner::Even, pool[v - 1]);
    for (int v = 1; v < n; v++) {
        int cap = max_deg;
        if (binary_even && g.owner[v] == Owner::Even) cap = 2;
        int deg = 1 + (int)(rng() % cap);
        std::uniform_int_distribution<int> dv(0, v - 1);
        std::vector<char> used(v, 0);
        for (int i = 0; i < deg; i++) {
            int u = dv(rng);
            if (used[u]) continue;
            used[u] = 1;
            g.add_edge(v, u);
        }
    }
    return g;
}

} // namespace testutil
