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
#include <vector>

namespace silab {

using priority_t = int64_t;

enum class Order { Less, Equal, Greater };

/**
 * Reward order on priorities, from Even's point of view:
 * odd priorities descending, then even priorities ascending.
 *
 *   ... 5 < 3 < 1 < 2 < 4 < 6 ...
 */
Order cmp_priority(priority_t p, priority_t q);

/**
 * Priority set, stored as a strictly descending vector.
 * All mutations must preserve that representation.
 */
using PrioritySet = std::vector<priority_t>;

/* Insert p, keeping the descending order. No-op if already present. */
void set_insert(PrioritySet &s, priority_t p);

bool set_contains(const PrioritySet &s, priority_t p);

/* Largest element of the symmetric difference. Throws if P == Q. */
priority_t maxdiff(const PrioritySet &p, const PrioritySet &q);

/**
 * Reward order on priority sets: P is below Q iff the largest priority
 * the two sets disagree on is even and belongs to Q, or odd and belongs
 * to P. Gaining an even priority helps, gaining an odd one hurts.
 */
Order cmp_priority_set(const PrioritySet &p, const PrioritySet &q);

/**
 * Play valuation: p = highest priority seen infinitely often,
 * s = priorities above p on the finite prefix, d = prefix length
 * counted in vertices (the sink alone has d = 1).
 */
struct Valuation {
    priority_t p = 0;
    PrioritySet s;
    int d = 0;

    bool operator==(const Valuation &o) const {
        return p == o.p && d == o.d && s == o.s;
    }
};

/**
 * Reward order on valuations: by p, then by s, then by prefix length,
 * where a longer prefix helps Even exactly when p is odd.
 */
Order cmp_valuation(const Valuation &a, const Valuation &b);

inline bool val_less(const Valuation &a, const Valuation &b) {
    return cmp_valuation(a, b) == Order::Less;
}
inline bool val_leq(const Valuation &a, const Valuation &b) {
    return cmp_valuation(a, b) != Order::Greater;
}

} // namespace silab
