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

#include <string>
#include <vector>

#include "silab/order.hpp"

namespace silab {

enum class Owner : int { Even = 0, Odd = 1 };

/**
 * Parity game on a finite directed graph. Every vertex carries a positive
 * priority and belongs to one of the two players; every vertex has at
 * least one successor. "Strict" games additionally have pairwise distinct
 * priorities, which the strategy improvement engine requires.
 */
struct ParityGame {
    std::vector<Owner> owner;
    std::vector<priority_t> pri;
    std::vector<std::vector<int>> succ;
    std::vector<std::string> label; // optional display names, "" if unnamed

    int size() const { return (int)owner.size(); }

    int add(Owner o, priority_t p, std::string name = "");
    void add_edge(int v, int u) { succ[v].push_back(u); }

    bool has_edge(int v, int u) const;

    /* Structural invariants: valid successor ids, no terminal vertex,
     * positive priorities. Throws on the first violation. */
    void validate() const;

    /* Priorities pairwise distinct? */
    bool strict() const;

    /* Typed rejection of non-strict games by valuation-based operations. */
    void require_strict(const char *op) const;

    /* Vertex with the given priority, or -1. Strict games only. */
    int vertex_with_priority(priority_t p) const;

    std::string display(int v) const; // label if set, else "v<id>"
};

/**
 * Positional strategy for one side. choice[v] is a successor of v for
 * every vertex v of that side and -1 elsewhere.
 */
struct Strategy {
    Owner side = Owner::Even;
    std::vector<int> choice;

    bool operator==(const Strategy &o) const {
        return side == o.side && choice == o.choice;
    }
};

/* Strategy picking the lowest-id successor at every owned vertex. */
Strategy lowest_id_strategy(const ParityGame &g, Owner side);

/* Every owned vertex has a legal choice, unowned vertices have none. */
void validate_strategy(const ParityGame &g, const Strategy &s);

/* Merge an Even and an Odd strategy into one successor function. */
std::vector<int> combine(const ParityGame &g, const Strategy &sigma,
                         const Strategy &tau);

} // namespace silab
