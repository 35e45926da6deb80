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

#include "silab/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace silab {

Order cmp_priority(priority_t p, priority_t q) {
    if (p == q) return Order::Equal;
    // Map to a line where the reward order is the usual <:
    // even p stays at +p, odd p goes to -p.
    priority_t a = (p % 2 == 0) ? p : -p;
    priority_t b = (q % 2 == 0) ? q : -q;
    return a < b ? Order::Less : Order::Greater;
}

void set_insert(PrioritySet &s, priority_t p) {
    auto it = std::lower_bound(s.begin(), s.end(), p, std::greater<priority_t>());
    if (it != s.end() && *it == p) return;
    s.insert(it, p);
}

bool set_contains(const PrioritySet &s, priority_t p) {
    auto it = std::lower_bound(s.begin(), s.end(), p, std::greater<priority_t>());
    return it != s.end() && *it == p;
}

priority_t maxdiff(const PrioritySet &p, const PrioritySet &q) {
    // Both vectors descend, so the first positional disagreement is the
    // largest element of the symmetric difference.
    size_t n = std::min(p.size(), q.size());
    for (size_t i = 0; i < n; i++) {
        if (p[i] != q[i]) return std::max(p[i], q[i]);
    }
    if (p.size() > n) return p[n];
    if (q.size() > n) return q[n];
    throw std::runtime_error("maxdiff: sets are equal");
}

Order cmp_priority_set(const PrioritySet &p, const PrioritySet &q) {
    if (p == q) return Order::Equal;
    priority_t d = maxdiff(p, q);
    bool in_q = set_contains(q, d);
    // d even and in Q, or d odd and in P: P below Q.
    if ((d % 2 == 0) == in_q) return Order::Less;
    return Order::Greater;
}

Order cmp_valuation(const Valuation &a, const Valuation &b) {
    Order c = cmp_priority(a.p, b.p);
    if (c != Order::Equal) return c;
    c = cmp_priority_set(a.s, b.s);
    if (c != Order::Equal) return c;
    if (a.d == b.d) return Order::Equal;
    // Both plays settle on the same dominant priority here, so the parity
    // of a.p decides whether a longer approach is good or bad for Even.
    if (a.p % 2 != 0) return a.d < b.d ? Order::Less : Order::Greater;
    return a.d > b.d ? Order::Less : Order::Greater;
}

} // namespace silab
