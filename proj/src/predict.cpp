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

#include "silab/predict.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace silab {

int PredictedStrategy::defined_count() const {
    int c = 0;
    for (int x : choice) c += x >= 0;
    return c;
}

namespace {

/* One phase's worth of schedule arithmetic, shared by the strategy and
 * best-response predictions. */
struct Pred {
    const GadgetGame &g;
    BitString B, K;
    int j, m;
    OrnextResolver ornext;

    BitString OCK;        // rival clock's counter value
    int shift = 0;        // rival side's head start
    std::vector<int> evb; // gate truth values under B
    BitString S;          // bits the computing store is writing
    std::vector<int> depth;

    Pred(const GadgetGame &gg, const BitString &b, const BitString &k, int jj,
         int mm, const OrnextResolver &orn)
        : g(gg), B(b), K(k), j(jj), m(mm), ornext(orn) {
        if (g.params.kind != GameKind::ClockOnly) {
            OCK = oc(K, j);
            shift = g.params.delay(1 - j, OCK);
            evb = eval_all(g.circuit, B);
            S.assign(g.params.n + 1, 0);
            for (int b2 = 1; b2 <= g.params.n; ++b2)
                S[b2] = 1 - evb[g.params.ck + b2];
            depth = g.circuit.depths();
        }
    }

    int vid(Fam f, int jj = 0, int ii = 0, int ll = 0) const {
        return g.id(f, jj, ii, ll);
    }

    /* Counter strategy for one clock side at schedule index mm. */
    int kappa(const VertexKey &v, const BitString &KK, int mm) const {
        const GadgetParams &P = g.params;
        int jj = v.j;
        int len = P.length(KK);
        if (mm < 1 || mm > len)
            throw std::runtime_error("counter index out of range");
        bool reset = mm == len;
        auto z = lsz(KK);
        switch (v.fam) {
        case Fam::ClkT0:
            return mm == 1 ? vid(Fam::ClkS, jj) : vid(Fam::ClkR, jj);
        case Fam::ClkT:
            if (mm == 1) return vid(Fam::ClkS, jj);
            if (mm <= v.l + 1) return vid(Fam::ClkR, jj);
            return v.l == 1 ? vid(Fam::ClkT0, jj)
                            : vid(Fam::ClkT, jj, 0, v.l - 1);
        case Fam::ClkA: return vid(Fam::ClkT, jj, 0, v.l);
        case Fam::ClkD: {
            if (KK[v.i] == 1) return vid(Fam::ClkE, jj, v.i);
            int top = P.ladder_top(v.i);
            if (mm == 1) return vid(Fam::ClkS, jj);
            if (mm == 2) return vid(Fam::ClkR, jj);
            if (mm == 3) return vid(Fam::ClkA, jj, 0, top);
            if (mm <= top + 3) return vid(Fam::ClkA, jj, 0, mm - 3);
            return vid(Fam::ClkE, jj, v.i);
        }
        case Fam::ClkG: {
            if (reset && z && v.i == *z) return vid(Fam::ClkF, jj, v.i);
            if (mm == 1) {
                // Bits cleared by the increment keep f for one more
                // step: their escape only flips back this round.
                auto low = nexbit(KK, 0);
                if (low && v.i < *low) return vid(Fam::ClkF, jj, v.i);
            }
            return KK[v.i] == 0 ? vid(Fam::ClkK, jj, v.i)
                                : vid(Fam::ClkF, jj, v.i);
        }
        case Fam::ClkK: {
            auto nb = nexbit(KK, v.i);
            return nb ? vid(Fam::ClkG, jj, *nb) : g.x_id;
        }
        case Fam::ClkF: return vid(Fam::ClkE, jj, v.i);
        case Fam::ClkH: return vid(Fam::ClkK, jj, v.i);
        case Fam::ClkS: {
            if (reset && z) return vid(Fam::ClkF, jj, *z);
            auto nb = nexbit(KK, 0);
            return nb ? vid(Fam::ClkF, jj, *nb) : g.x_id;
        }
        case Fam::ClkR: {
            auto nb = nexbit(KK, 0);
            return nb ? vid(Fam::ClkG, jj, *nb) : g.x_id;
        }
        default: throw std::runtime_error("kappa: not a clock vertex");
        }
    }

    int state_of(int gate, int side) const {
        return g.gate_output_vertex(gate, side);
    }

    /* Gate gadget strategy on the computing side. */
    int gate_choice(const VertexKey &v) const {
        const GadgetParams &P = g.params;
        const CircuitSpec &c = g.circuit;
        int jj = v.j, L = P.lane;
        switch (v.fam) {
        case Fam::OrO: {
            int D = depth[v.i];
            if (m == 1) return vid(Fam::ClkS, jj);
            if (m <= D + 2) return vid(Fam::ClkR, jj);
            int h1 = c.at(v.i).in1, h2 = c.at(v.i).in2;
            int v1 = evb[h1], v2 = evb[h2];
            if (v1 == 0 && v2 == 0) return vid(Fam::ClkR, jj);
            if (v1 == 1 && v2 == 0) return state_of(h1, jj);
            if (v1 == 0 && v2 == 1) return state_of(h2, jj);
            if (!ornext)
                throw std::runtime_error("two true arms need a resolver at " +
                                         v.name());
            return ornext(g.id(Fam::OrO, jj, v.i), state_of(h1, jj),
                          state_of(h2, jj));
        }
        case Fam::NotT: {
            int D = depth[v.i];
            if (v.l == D) return state_of(c.at(v.i).in1, jj);
            bool frozen = v.l > D && evb[c.at(v.i).in1] == 0;
            if (m == 1) return vid(Fam::ClkS, jj);
            if (frozen || v.l == 0 || m <= v.l + 1) return vid(Fam::ClkR, jj);
            return vid(Fam::NotT, jj, v.i, v.l - 1);
        }
        case Fam::NotA: return vid(Fam::NotT, jj, v.i, v.l);
        case Fam::NotD: {
            int D = depth[v.i];
            if (m > D + 2 && evb[c.at(v.i).in1] == 0)
                return vid(Fam::NotE, jj, v.i);
            if (m == 1) return vid(Fam::ClkS, jj);
            if (m == 2) return vid(Fam::ClkR, jj);
            if (m == 3) return vid(Fam::NotA, jj, v.i, L);
            if (m <= L + 3) return vid(Fam::NotA, jj, v.i, m - 3);
            return vid(Fam::NotE, jj, v.i);
        }
        case Fam::NotO: return vid(Fam::NotE, jj, v.i);
        case Fam::NotH: return vid(Fam::ClkR, jj);
        default: throw std::runtime_error("gate_choice: not a gate vertex");
        }
    }

    /* Store gadget strategy; bit = held bit, idx = schedule index of
     * that side. Returns -1 where the schedule leaves it open. */
    int io_choice(const VertexKey &v, int bit, int idx) const {
        const GadgetParams &P = g.params;
        int jj = v.j, L = P.lane, D = P.dC;
        switch (v.fam) {
        case Fam::IoT: {
            if (v.l == D) return vid(Fam::IoP, jj, v.i);
            bool frozen = v.l > D && bit == 1;
            if (frozen) return idx == 2 ? vid(Fam::MovZ, jj)
                                        : vid(Fam::MovY, jj);
            if (idx == 1) return vid(Fam::MovY, jj);
            if (idx == 2) return vid(Fam::MovZ, jj);
            if (v.l == 0 || idx <= v.l + 2) return vid(Fam::MovY, jj);
            return vid(Fam::IoT, jj, v.i, v.l - 1);
        }
        case Fam::IoA: return vid(Fam::IoT, jj, v.i, v.l);
        case Fam::IoD: {
            if (idx == 1) return -1; // depends on the previous phase
            if (idx > D + 3 && bit == 1) return vid(Fam::IoE, jj, v.i);
            int mm = idx - 1;
            if (mm == 1) return vid(Fam::MovZ, jj);
            if (mm == 2) return vid(Fam::MovY, jj);
            if (mm == 3) return vid(Fam::IoA, jj, v.i, L);
            if (mm <= L + 3) return vid(Fam::IoA, jj, v.i, mm - 3);
            return vid(Fam::IoE, jj, v.i);
        }
        case Fam::IoQ1: return vid(Fam::ClkR, 1 - jj);
        case Fam::IoO: return vid(Fam::IoQ0, jj, v.i);
        case Fam::IoP1: return vid(Fam::ClkR, 1 - jj);
        case Fam::IoH1: return vid(Fam::ClkR, jj);
        case Fam::IoH2: return vid(Fam::ClkR, 1 - jj);
        default: throw std::runtime_error("io_choice: not a store vertex");
        }
    }

    /* Mover strategy; del = the side's own handoff delay. */
    int mover_choice(const VertexKey &v, int idx, int del) const {
        int jj = v.j;
        switch (v.fam) {
        case Fam::MovZ:
            return idx == 1 ? vid(Fam::ClkS, jj) : vid(Fam::ClkR, jj);
        case Fam::MovY:
            return (idx == 1 || idx >= del + 1) ? vid(Fam::ClkR, 1 - jj)
                                                : vid(Fam::ClkR, jj);
        case Fam::IoP:
            return (idx == 1 || idx >= del + 1)
                       ? vid(Fam::IoP1, jj, v.i)
                       : state_of(g.circuit.at(v.i).in1, jj);
        case Fam::IoH0:
            return (idx == 1 || idx >= del + 1) ? vid(Fam::IoH2, jj, v.i)
                                                : vid(Fam::IoH1, jj, v.i);
        default: throw std::runtime_error("mover_choice: not a mover");
        }
    }

    /* The replaced d-row of the optimal-strategy variant routes through
     * its relay layer. */
    int remap_relay(int target) const {
        const GadgetParams &P = g.params;
        int phi = P.ck + g.z;
        if (target == vid(Fam::MovY, 1)) return vid(Fam::Relay, 0, 1);
        if (target == vid(Fam::MovZ, 1)) return vid(Fam::Relay, 0, 2);
        if (target == vid(Fam::IoE, 1, phi)) return vid(Fam::Relay, 0, 3);
        for (int l = 1; l <= P.lane; ++l)
            if (target == vid(Fam::IoA, 1, phi, l))
                return vid(Fam::Relay, 0, 3 + l);
        throw std::runtime_error("relay remap: unexpected target");
    }

    PredictedStrategy even() const {
        PredictedStrategy p;
        p.side = Owner::Even;
        p.choice.assign(g.game.size(), -1);
        p.B = B;
        p.K = K;
        p.j = j;
        p.m = m;
        const GadgetParams &P = g.params;
        BitString K2;
        if (P.kind == GameKind::OptStrat) K2 = make_bits(P.n + 1, 1);
        for (int v = 0; v < g.game.size(); ++v) {
            if (g.game.owner[v] != Owner::Even) continue;
            const VertexKey &key = g.key[v];
            switch (key.fam) {
            case Fam::X: p.choice[v] = g.x_id; break;
            case Fam::ClkT0:
            case Fam::ClkT:
            case Fam::ClkA:
            case Fam::ClkD:
            case Fam::ClkG:
            case Fam::ClkK:
            case Fam::ClkF:
            case Fam::ClkH:
            case Fam::ClkS:
            case Fam::ClkR:
                if (key.j == 2) p.choice[v] = kappa(key, K2, m);
                else if (key.j == j) p.choice[v] = kappa(key, K, m);
                else p.choice[v] = kappa(key, OCK, m + shift);
                break;
            case Fam::OrO:
            case Fam::NotT:
            case Fam::NotA:
            case Fam::NotD:
            case Fam::NotO:
            case Fam::NotH:
                if (key.j == j) p.choice[v] = gate_choice(key);
                break; // resting side left open
            case Fam::IoT:
            case Fam::IoA:
            case Fam::IoD:
            case Fam::IoQ1:
            case Fam::IoO:
            case Fam::IoP1:
            case Fam::IoH1:
            case Fam::IoH2: {
                int b = key.i - P.ck;
                int target =
                    key.j == j ? io_choice(key, S[b], m)
                               : io_choice(key, B[b], m + shift);
                if (P.kind == GameKind::OptStrat && key.fam == Fam::IoD &&
                    key.j == 1 && b == g.z && target >= 0)
                    target = remap_relay(target);
                p.choice[v] = target;
                break;
            }
            case Fam::IoP:
            case Fam::IoH0:
            case Fam::MovY:
            case Fam::MovZ:
                if (key.j == j)
                    p.choice[v] = mover_choice(key, m, P.delay(j, K));
                else
                    p.choice[v] = mover_choice(key, m + shift, shift);
                break;
            case Fam::Relay:
                p.choice[v] = g.game.succ[v][0];
                break;
            default: break;
            }
            if (p.choice[v] >= 0 && !g.game.has_edge(v, p.choice[v]))
                throw std::runtime_error("prediction is not edge-legal at " +
                                         key.name());
        }
        return p;
    }

    PredictedStrategy odd() const {
        PredictedStrategy p;
        p.side = Owner::Odd;
        p.choice.assign(g.game.size(), -1);
        p.B = B;
        p.K = K;
        p.j = j;
        p.m = m;
        const GadgetParams &P = g.params;
        BitString K2;
        if (P.kind == GameKind::OptStrat) K2 = make_bits(P.n + 1, 1);
        for (int v = 0; v < g.game.size(); ++v) {
            if (g.game.owner[v] != Owner::Odd) continue;
            const VertexKey &key = g.key[v];
            switch (key.fam) {
            case Fam::ClkE: {
                const BitString &KK =
                    key.j == 2 ? K2 : key.j == j ? K : OCK;
                int idx = key.j == j || key.j == 2 ? m : m + shift;
                bool held = KK[key.i] == 1 || idx > P.ladder_top(key.i) + 3;
                if (g.game.succ[v].size() == 1)
                    p.choice[v] = g.game.succ[v][0];
                else
                    p.choice[v] = held ? vid(Fam::ClkH, key.j, key.i)
                                       : vid(Fam::ClkD, key.j, key.i);
                break;
            }
            case Fam::NotE:
                if (key.j != j) break; // resting gates stay open
                p.choice[v] = (m > depth[key.i] + 2 &&
                               evb[g.circuit.at(key.i).in1] == 0)
                                  ? vid(Fam::NotH, key.j, key.i)
                                  : vid(Fam::NotD, key.j, key.i);
                break;
            case Fam::IoE: {
                int b = key.i - P.ck;
                if (key.j == j) {
                    if (m == 1) break; // depends on the previous phase
                    p.choice[v] = (m > P.dC + 3 && S[b] == 1)
                                      ? vid(Fam::IoH0, key.j, key.i)
                                      : vid(Fam::IoD, key.j, key.i);
                } else {
                    p.choice[v] = B[b] == 1 ? vid(Fam::IoH0, key.j, key.i)
                                            : vid(Fam::IoD, key.j, key.i);
                }
                break;
            }
            case Fam::IoQ0:
                if (key.j == j)
                    p.choice[v] = m == 1 ? vid(Fam::IoE, key.j, key.i)
                                         : vid(Fam::IoQ1, key.j, key.i);
                else
                    p.choice[v] = vid(Fam::IoE, key.j, key.i);
                break;
            default: break;
            }
            if (p.choice[v] >= 0 && !g.game.has_edge(v, p.choice[v]))
                throw std::runtime_error("prediction is not edge-legal at " +
                                         key.name());
        }
        return p;
    }
};

PredictedStrategy clock_only(const GadgetGame &g, const BitString &K, int m) {
    if ((int)K.size() != g.params.n + 1)
        throw std::runtime_error("counter width mismatch");
    Pred pr(g, {}, K, 0, m, {});
    PredictedStrategy p;
    p.side = Owner::Even;
    p.choice.assign(g.game.size(), -1);
    p.K = K;
    p.m = m;
    for (int v = 0; v < g.game.size(); ++v) {
        if (g.game.owner[v] != Owner::Even) continue;
        const VertexKey &key = g.key[v];
        p.choice[v] = key.fam == Fam::X ? g.x_id : pr.kappa(key, K, m);
        if (!g.game.has_edge(v, p.choice[v]))
            throw std::runtime_error("prediction is not edge-legal at " +
                                     key.name());
    }
    return p;
}

} // namespace

BitString stored_step(const CircuitSpec &c, const BitString &B) {
    BitString FB = make_bits(c.n, 0);
    std::vector<int> ev = eval_all(c, B);
    for (int b = 1; b <= c.n; ++b) FB[b] = 1 - ev[c.output(b)];
    return FB;
}

PredictedStrategy predict(const GadgetGame &g, const BitString &B,
                          const BitString &K, int j, int m,
                          const OrnextResolver &ornext) {
    if (g.params.kind == GameKind::ClockOnly) return clock_only(g, K, m);
    if ((int)K.size() != g.params.n + 1)
        throw std::runtime_error("counter width mismatch");
    if (j != 0 && j != 1) throw std::runtime_error("side out of range");
    int del = g.params.delay(j, K);
    if (m < 1 || m > del) throw std::runtime_error("iterate out of range");
    if (m == del) {
        // Handoff identity: the boundary iterate is the next phase's first.
        BitString FB = stored_step(g.circuit, B);
        if (j == 0) return predict(g, FB, K, 1, 1, ornext);
        return predict(g, FB, bits_increment(K), 0, 1, ornext);
    }
    return Pred(g, B, K, j, m, ornext).even();
}

PredictedStrategy predict_br(const GadgetGame &g, const BitString &B,
                             const BitString &K, int j, int m) {
    if (g.params.kind == GameKind::ClockOnly) {
        if ((int)K.size() != g.params.n + 1)
            throw std::runtime_error("counter width mismatch");
        if (m < 1 || m > g.params.length(K))
            throw std::runtime_error("iterate out of range");
        Pred pr(g, {}, K, 0, m, {});
        PredictedStrategy p;
        p.side = Owner::Odd;
        p.choice.assign(g.game.size(), -1);
        p.K = K;
        p.m = m;
        for (int v = 0; v < g.game.size(); ++v) {
            if (g.game.owner[v] != Owner::Odd) continue;
            const VertexKey &key = g.key[v];
            bool held =
                K[key.i] == 1 || m > g.params.ladder_top(key.i) + 3;
            p.choice[v] = held ? g.id(Fam::ClkH, key.j, key.i)
                               : g.id(Fam::ClkD, key.j, key.i);
        }
        return p;
    }
    if ((int)K.size() != g.params.n + 1)
        throw std::runtime_error("counter width mismatch");
    int del = g.params.delay(j, K);
    if (m < 1 || m > del) throw std::runtime_error("iterate out of range");
    if (m == del) {
        BitString FB = stored_step(g.circuit, B);
        if (j == 0) return predict_br(g, FB, K, 1, 1);
        return predict_br(g, FB, bits_increment(K), 0, 1);
    }
    return Pred(g, B, K, j, m, {}).odd();
}

Strategy complete(const GadgetGame &g, const PredictedStrategy &p,
                  FillMode mode, uint64_t seed) {
    Strategy s;
    s.side = p.side;
    s.choice.assign(g.game.size(), -1);
    std::mt19937_64 rng(seed);
    for (int v = 0; v < g.game.size(); ++v) {
        if (g.game.owner[v] != p.side) continue;
        if (p.defined(v)) {
            s.choice[v] = p.choice[v];
            continue;
        }
        const std::vector<int> &su = g.game.succ[v];
        if (mode == FillMode::LowestId) {
            s.choice[v] = *std::min_element(su.begin(), su.end());
        } else {
            std::uniform_int_distribution<size_t> d(0, su.size() - 1);
            s.choice[v] = su[d(rng)];
        }
    }
    validate_strategy(g.game, s);
    return s;
}

} // namespace silab
