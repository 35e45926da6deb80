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

#include "silab/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace silab {

Play play(const ParityGame &g, int v0, const Strategy &sigma,
          const Strategy &tau) {
    g.require_strict("play");
    std::vector<int> next = combine(g, sigma, tau);
    std::vector<int> pos(g.size(), -1);
    std::vector<int> seq;
    int v = v0;
    while (pos[v] < 0) {
        pos[v] = (int)seq.size();
        seq.push_back(v);
        v = next[v];
    }
    // seq[pos[v]..] closes the cycle; find its dominant vertex.
    int dom = v;
    for (int i = pos[v]; i < (int)seq.size(); i++)
        if (g.pri[seq[i]] > g.pri[dom]) dom = seq[i];

    Play p;
    for (int i = 0; i <= pos[dom]; i++) p.prefix.push_back(seq[i]);
    int w = dom;
    do {
        p.cycle.push_back(w);
        w = next[w];
    } while (w != dom);
    return p;
}

std::vector<Valuation> evaluate_profile(const ParityGame &g,
                                        const std::vector<int> &next) {
    g.require_strict("evaluate_profile");
    int n = g.size();
    std::vector<Valuation> val(n);
    std::vector<char> state(n, 0); // 0 new, 1 on walk, 2 done
    std::vector<char> is_dom(n, 0);
    std::vector<int> walk;

    for (int start = 0; start < n; start++) {
        if (state[start] == 2) continue;
        walk.clear();
        int v = start;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = next[v];
        }
        if (state[v] == 1) {
            // New cycle, closed at v. Find its dominant vertex and give
            // the cycle vertices their around-the-loop valuations. The
            // dominant's own finite path wraps around the whole cycle, so
            // its length equals the cycle length.
            int dom = v;
            for (int w = next[v]; w != v; w = next[w])
                if (g.pri[w] > g.pri[dom]) dom = w;
            priority_t p = g.pri[dom];
            int len = 1;
            for (int w = next[dom]; w != dom; w = next[w]) len++;
            val[dom] = Valuation{p, {}, len};
            state[dom] = 2;
            is_dom[dom] = 1;
            // The vertex right after dom walks the whole loop back, so its
            // prefix has len vertices; each further step shortens it by one.
            int d = len;
            for (int w = next[dom]; w != dom; w = next[w]) {
                val[w] = Valuation{p, {}, d};
                state[w] = 2;
                d--;
            }
        }
        // Remaining walk vertices lead into finished territory.
        for (int i = (int)walk.size() - 1; i >= 0; i--) {
            int w = walk[i];
            if (state[w] == 2) continue;
            const Valuation &nx = val[next[w]];
            val[w].p = nx.p;
            val[w].s = nx.s;
            if (g.pri[w] > nx.p) set_insert(val[w].s, g.pri[w]);
            // A step onto the dominant starts a fresh two-vertex path; the
            // dominant's own d describes its loop, not a usable suffix.
            val[w].d = (is_dom[next[w]] ? 1 : nx.d) + 1;
            state[w] = 2;
        }
    }
    return val;
}

Valuation vj_valuation(const ParityGame &g, const Strategy &sigma,
                       const Strategy &tau, int v) {
    return evaluate_profile(g, combine(g, sigma, tau))[v];
}

namespace {

/*
 * Exact evaluation of the one-player game that remains once sigma is fixed.
 * Odd routes every play toward the most favourable reachable cycle, so the
 * vertex set decomposes into "claim sets": process candidate cycle tops in
 * reward order, and the first candidate that still lies on a cycle of lower
 * priorities claims everything that can reach it. Inside a claim set the
 * prefix components are resolved priority by priority from above: an odd
 * priority above p is visited by every vertex that can reach it, an even one
 * is avoided by every vertex that can avoid it, and either split is
 * self-contained. What is left at the bottom only competes on prefix length.
 */
struct ResponseSolver {
    const ParityGame &g;
    std::vector<std::vector<int>> succ; // per-vertex choices under sigma
    std::vector<std::vector<int>> pred;
    std::vector<Valuation> val;
    std::vector<int> mark;
    int gen = 0;
    std::vector<int> dist;
    std::vector<int> cnt;
    std::vector<char> valued;
    std::vector<int> tau_next;

    ResponseSolver(const ParityGame &game, const Strategy &sigma) : g(game) {
        int n = g.size();
        succ.resize(n);
        pred.resize(n);
        val.resize(n);
        mark.assign(n, 0);
        dist.assign(n, 0);
        cnt.assign(n, 0);
        valued.assign(n, 0);
        tau_next.assign(n, -1);
        for (int v = 0; v < n; v++) {
            if (g.owner[v] == Owner::Even) {
                succ[v] = {sigma.choice[v]};
            } else {
                succ[v] = g.succ[v];
                std::sort(succ[v].begin(), succ[v].end());
                succ[v].erase(std::unique(succ[v].begin(), succ[v].end()),
                              succ[v].end());
            }
            for (int u : succ[v]) pred[u].push_back(v);
        }
    }

    void stamp(const std::vector<int> &verts) {
        gen++;
        for (int v : verts) mark[v] = gen;
    }
    bool in(int v) const { return mark[v] == gen; }

    /* Vertices of verts that reach t along edges staying inside verts. */
    std::vector<int> reach_to(const std::vector<int> &verts, int t) {
        stamp(verts);
        std::vector<int> out = {t};
        int seen = ++gen; // second stamp marks visited
        // mark[v] == seen-1 means member, == seen means member and reached
        mark[t] = seen;
        for (size_t i = 0; i < out.size(); i++) {
            for (int p : pred[out[i]]) {
                if (mark[p] == seen - 1) {
                    mark[p] = seen;
                    out.push_back(p);
                }
            }
        }
        return out;
    }

    bool viable(const std::vector<int> &low, int w) {
        stamp(low);
        std::vector<int> queue;
        int seen = ++gen;
        for (int x : succ[w])
            if (mark[x] == seen - 1) {
                if (x == w) return true;
                mark[x] = seen;
                queue.push_back(x);
            }
        for (size_t i = 0; i < queue.size(); i++) {
            for (int x : succ[queue[i]]) {
                if (x == w) return true;
                if (mark[x] == seen - 1) {
                    mark[x] = seen;
                    queue.push_back(x);
                }
            }
        }
        return false;
    }

    /* Prefix values for verts towards target t; val[t] is already set. */
    void subval(const std::vector<int> &verts, int t, priority_t p) {
        if (verts.size() <= 1) return;
        int top = -1;
        for (int v : verts)
            if (v != t && g.pri[v] > p && (top < 0 || g.pri[v] > g.pri[top]))
                top = v;
        if (top < 0) {
            base_distances(verts, t, p);
            return;
        }
        priority_t q = g.pri[top];
        std::vector<int> a, b;
        if (q % 2 != 0) {
            // Everything that can reach top before t detours through it.
            std::vector<int> inner;
            inner.reserve(verts.size());
            for (int v : verts)
                if (v != t) inner.push_back(v);
            a = reach_to(inner, top);
            stamp(a);
            for (int v : verts)
                if (!in(v)) b.push_back(v);
        } else {
            // Everything that can still reach t without top avoids it.
            std::vector<int> inner;
            inner.reserve(verts.size());
            for (int v : verts)
                if (v != top) inner.push_back(v);
            b = reach_to(inner, t);
            stamp(b);
            for (int v : verts)
                if (!in(v)) a.push_back(v);
        }
        subval(b, t, p);
        stamp(b);
        int pick = -1;
        for (int x : succ[top]) {
            if (!in(x)) continue;
            if (pick < 0 || val_less(val[x], val[pick])) pick = x;
        }
        if (pick < 0)
            throw std::runtime_error("best_response: detour has no continuation");
        val[top].p = p;
        val[top].s = val[pick].s;
        set_insert(val[top].s, q);
        val[top].d = val[pick].d + 1;
        subval(a, top, p);
    }

    /* No priorities above p remain: only the prefix length is left to set. */
    void base_distances(const std::vector<int> &verts, int t, priority_t p) {
        if (p % 2 != 0) {
            // Odd cycle top: every prefix wants to be as short as possible.
            stamp(verts);
            std::vector<int> queue = {t};
            int seen = ++gen;
            mark[t] = seen;
            dist[t] = 0;
            for (size_t i = 0; i < queue.size(); i++) {
                int x = queue[i];
                for (int pr : pred[x]) {
                    if (mark[pr] == seen - 1) {
                        mark[pr] = seen;
                        dist[pr] = dist[x] + 1;
                        queue.push_back(pr);
                    }
                }
            }
            if (queue.size() != verts.size())
                throw std::runtime_error("best_response: unreachable prefix vertex");
        } else {
            // Even cycle top: prefixes stall as long as they can. All cycles
            // left in here would have claimed earlier, so this is acyclic and
            // the longest path is well defined.
            stamp(verts);
            std::vector<int> order;
            for (int v : verts) {
                if (v == t) continue;
                cnt[v] = 0;
                for (int x : succ[v])
                    if (in(x) && x != t) cnt[v]++;
            }
            for (int v : verts)
                if (v != t && cnt[v] == 0) order.push_back(v);
            for (size_t i = 0; i < order.size(); i++) {
                int v = order[i];
                int best = -1;
                for (int x : succ[v]) {
                    if (!in(x)) continue;
                    int dx = (x == t) ? 0 : dist[x];
                    if (dx > best) best = dx;
                }
                dist[v] = best + 1;
                for (int pr : pred[v]) {
                    if (in(pr) && pr != t && --cnt[pr] == 0) order.push_back(pr);
                }
            }
            if (order.size() + 1 != verts.size())
                throw std::runtime_error("best_response: cyclic prefix residue");
        }
        for (int v : verts) {
            if (v == t) continue;
            val[v].p = p;
            val[v].s = val[t].s;
            val[v].d = val[t].d + dist[v];
        }
    }

    void solve() {
        int n = g.size();
        std::vector<char> claimed(n, 0);
        std::vector<int> candidates(n);
        for (int i = 0; i < n; i++) candidates[i] = i;
        std::sort(candidates.begin(), candidates.end(), [&](int x, int y) {
            return cmp_priority(g.pri[x], g.pri[y]) == Order::Less;
        });
        int left = n;
        while (left > 0) {
            int w = -1;
            std::vector<int> low;
            for (int cand : candidates) {
                if (claimed[cand]) continue;
                low.clear();
                for (int v = 0; v < n; v++)
                    if (!claimed[v] && g.pri[v] <= g.pri[cand]) low.push_back(v);
                if (viable(low, cand)) {
                    w = cand;
                    break;
                }
            }
            if (w < 0)
                throw std::runtime_error("best_response: no claimable cycle left");
            std::vector<int> open;
            for (int v = 0; v < n; v++)
                if (!claimed[v]) open.push_back(v);
            std::vector<int> c = reach_to(open, w);
            val[w] = Valuation{g.pri[w], {}, 1};
            subval(c, w, g.pri[w]);
            // Choices must be fixed now, while val[w] still carries the
            // one-vertex weight a step onto w contributes to a prefix. Odd
            // never leaves the claim set: unvalued successors belong to
            // later, strictly less favourable claims.
            for (int v : c) valued[v] = 1;
            for (int v : c) {
                if (g.owner[v] != Owner::Odd) continue;
                int best = -1;
                for (int u : g.succ[v]) {
                    if (!valued[u]) continue;
                    if (best < 0 || val_less(val[u], val[best]) ||
                        (cmp_valuation(val[u], val[best]) == Order::Equal &&
                         u < best))
                        best = u;
                }
                tau_next[v] = best;
            }
            // The claim top's own path wraps around its cycle: the first
            // step already knows the full loop length.
            int nw = (g.owner[w] == Owner::Odd) ? tau_next[w] : succ[w][0];
            val[w].d = val[nw].d;
            for (int v : c) {
                claimed[v] = 1;
                left--;
            }
        }
    }
};

} // namespace

Strategy best_response(const ParityGame &g, const Strategy &sigma,
                       std::vector<Valuation> &vals_out) {
    g.require_strict("best_response");

    ResponseSolver solver(g, sigma);
    solver.solve();

    // The pointwise minimum over successors is realizable in one strategy;
    // ties broke toward the lowest vertex id inside the solver.
    Strategy tau = lowest_id_strategy(g, Owner::Odd);
    for (int v = 0; v < g.size(); v++)
        if (g.owner[v] == Owner::Odd) tau.choice[v] = solver.tau_next[v];

    std::vector<Valuation> check = evaluate_profile(g, combine(g, sigma, tau));
    for (int v = 0; v < g.size(); v++)
        if (!(check[v] == solver.val[v]))
            throw std::runtime_error(
                "best_response: computed strategy misses its valuation at " +
                g.display(v));

    vals_out = std::move(check);
    return tau;
}

Strategy best_response(const ParityGame &g, const Strategy &sigma) {
    std::vector<Valuation> ignore;
    return best_response(g, sigma, ignore);
}

} // namespace silab
