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

#include "silab/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace silab {

int ParityGame::add(Owner o, priority_t p, std::string name) {
    owner.push_back(o);
    pri.push_back(p);
    succ.emplace_back();
    label.push_back(std::move(name));
    return (int)owner.size() - 1;
}

bool ParityGame::has_edge(int v, int u) const {
    const auto &s = succ[v];
    return std::find(s.begin(), s.end(), u) != s.end();
}

void ParityGame::validate() const {
    for (int v = 0; v < size(); v++) {
        if (pri[v] < 1)
            throw std::runtime_error("game: vertex " + display(v) +
                                     " has non-positive priority");
        if (succ[v].empty())
            throw std::runtime_error("game: vertex " + display(v) +
                                     " has no successor");
        for (int u : succ[v])
            if (u < 0 || u >= size())
                throw std::runtime_error("game: vertex " + display(v) +
                                         " has successor out of range");
    }
}

bool ParityGame::strict() const {
    std::unordered_set<priority_t> seen;
    for (priority_t p : pri)
        if (!seen.insert(p).second) return false;
    return true;
}

void ParityGame::require_strict(const char *op) const {
    if (!strict())
        throw std::runtime_error(std::string(op) +
                                 ": game has duplicate priorities");
}

int ParityGame::vertex_with_priority(priority_t p) const {
    for (int v = 0; v < size(); v++)
        if (pri[v] == p) return v;
    return -1;
}

std::string ParityGame::display(int v) const {
    if (v >= 0 && v < size() && !label[v].empty()) return label[v];
    return "v" + std::to_string(v);
}

Strategy lowest_id_strategy(const ParityGame &g, Owner side) {
    Strategy s;
    s.side = side;
    s.choice.assign(g.size(), -1);
    for (int v = 0; v < g.size(); v++)
        if (g.owner[v] == side)
            s.choice[v] = *std::min_element(g.succ[v].begin(), g.succ[v].end());
    return s;
}

void validate_strategy(const ParityGame &g, const Strategy &s) {
    if ((int)s.choice.size() != g.size())
        throw std::runtime_error("strategy: wrong vertex count");
    for (int v = 0; v < g.size(); v++) {
        if (g.owner[v] != s.side) {
            if (s.choice[v] != -1)
                throw std::runtime_error("strategy: choice at unowned vertex " +
                                         g.display(v));
            continue;
        }
        if (!g.has_edge(v, s.choice[v]))
            throw std::runtime_error("strategy: illegal choice at " +
                                     g.display(v));
    }
}

std::vector<int> combine(const ParityGame &g, const Strategy &sigma,
                         const Strategy &tau) {
    std::vector<int> next(g.size());
    for (int v = 0; v < g.size(); v++)
        next[v] = g.owner[v] == Owner::Even ? sigma.choice[v] : tau.choice[v];
    return next;
}

} // namespace silab
