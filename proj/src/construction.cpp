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

#include "silab/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "silab/predict.hpp"

namespace silab {

const char *fam_name(Fam f) {
    switch (f) {
    case Fam::X: return "x";
    case Fam::ClkT0: return "clk_t0";
    case Fam::ClkT: return "clk_t";
    case Fam::ClkA: return "clk_a";
    case Fam::ClkD: return "clk_d";
    case Fam::ClkE: return "clk_e";
    case Fam::ClkG: return "clk_g";
    case Fam::ClkK: return "clk_k";
    case Fam::ClkF: return "clk_f";
    case Fam::ClkH: return "clk_h";
    case Fam::ClkS: return "clk_s";
    case Fam::ClkR: return "clk_r";
    case Fam::OrO: return "or_o";
    case Fam::NotT: return "not_t";
    case Fam::NotA: return "not_a";
    case Fam::NotD: return "not_d";
    case Fam::NotE: return "not_e";
    case Fam::NotO: return "not_o";
    case Fam::NotH: return "not_h";
    case Fam::IoT: return "io_t";
    case Fam::IoA: return "io_a";
    case Fam::IoD: return "io_d";
    case Fam::IoE: return "io_e";
    case Fam::IoQ0: return "io_q0";
    case Fam::IoQ1: return "io_q1";
    case Fam::IoO: return "io_o";
    case Fam::IoP: return "io_p";
    case Fam::IoP1: return "io_p1";
    case Fam::IoH0: return "io_h0";
    case Fam::IoH1: return "io_h1";
    case Fam::IoH2: return "io_h2";
    case Fam::MovY: return "mov_y";
    case Fam::MovZ: return "mov_z";
    case Fam::Relay: return "relay";
    }
    return "?";
}

std::string VertexKey::name() const {
    std::ostringstream os;
    switch (fam) {
    case Fam::X: return "x";
    case Fam::ClkT0: os << "t0@" << j; break;
    case Fam::ClkT: os << "t" << l << "@" << j; break;
    case Fam::ClkA: os << "a" << l << "@" << j; break;
    case Fam::ClkD: os << "d" << i << "@" << j; break;
    case Fam::ClkE: os << "e" << i << "@" << j; break;
    case Fam::ClkG: os << "g" << i << "@" << j; break;
    case Fam::ClkK: os << "k" << i << "@" << j; break;
    case Fam::ClkF: os << "f" << i << "@" << j; break;
    case Fam::ClkH: os << "h" << i << "@" << j; break;
    case Fam::ClkS: os << "s@" << j; break;
    case Fam::ClkR: os << "r@" << j; break;
    case Fam::OrO: os << "o" << i << "@" << j; break;
    case Fam::NotT: os << "nt" << i << "." << l << "@" << j; break;
    case Fam::NotA: os << "na" << i << "." << l << "@" << j; break;
    case Fam::NotD: os << "nd" << i << "@" << j; break;
    case Fam::NotE: os << "ne" << i << "@" << j; break;
    case Fam::NotO: os << "no" << i << "@" << j; break;
    case Fam::NotH: os << "nh" << i << "@" << j; break;
    case Fam::IoT: os << "it" << i << "." << l << "@" << j; break;
    case Fam::IoA: os << "ia" << i << "." << l << "@" << j; break;
    case Fam::IoD: os << "id" << i << "@" << j; break;
    case Fam::IoE: os << "ie" << i << "@" << j; break;
    case Fam::IoQ0: os << "iq" << i << ".0@" << j; break;
    case Fam::IoQ1: os << "iq" << i << ".1@" << j; break;
    case Fam::IoO: os << "io" << i << "@" << j; break;
    case Fam::IoP: os << "ip" << i << "@" << j; break;
    case Fam::IoP1: os << "ip" << i << ".1@" << j; break;
    case Fam::IoH0: os << "ih" << i << ".0@" << j; break;
    case Fam::IoH1: os << "ih" << i << ".1@" << j; break;
    case Fam::IoH2: os << "ih" << i << ".2@" << j; break;
    case Fam::MovY: os << "y@" << j; break;
    case Fam::MovZ: os << "z@" << j; break;
    case Fam::Relay: os << "v" << i; break;
    }
    return os.str();
}

priority_t pp(const PriorityArgs &a, long long V) {
    if (a.c < 0 || a.c > 8) throw std::runtime_error("pp: band out of range");
    if (a.i < 0 || a.i >= V) throw std::runtime_error("pp: unit out of range");
    if (a.l < 0 || a.l >= V) throw std::runtime_error("pp: slot out of range");
    if (a.j < 0 || a.e < 0 || a.e > 1)
        throw std::runtime_error("pp: side/parity out of range");
    return (priority_t)6 * V * V * a.c + (priority_t)6 * V * a.i +
           6LL * a.l + 2LL * a.j + a.e;
}

static int width(const BitString &K) { return (int)K.size() - 1; }

std::optional<int> lsz(const BitString &K) {
    for (int i = 1; i <= width(K); ++i)
        if (K[i] == 0) return i;
    return std::nullopt;
}

std::optional<int> nexbit(const BitString &K, int i) {
    for (int l = i + 1; l <= width(K); ++l)
        if (K[l] == 1) return l;
    return std::nullopt;
}

BitString oc(const BitString &K, int j) {
    return j == 0 ? bits_decrement(K) : K;
}

BitString bits_increment(const BitString &K) {
    BitString r = K;
    for (int i = 1; i <= width(r); ++i) {
        if (r[i] == 0) {
            r[i] = 1;
            return r;
        }
        r[i] = 0;
    }
    throw std::runtime_error("bits_increment: overflow");
}

BitString bits_decrement(const BitString &K) {
    BitString r = K;
    for (int i = 1; i <= width(r); ++i) {
        if (r[i] == 1) {
            r[i] = 0;
            return r;
        }
        r[i] = 1;
    }
    throw std::runtime_error("bits_decrement: underflow");
}

int GadgetParams::length(const BitString &K) const {
    int z = lsz(K).value_or(width(K) + 1);
    return (2 * k + 2 * n + 6) + 2 * z + 5;
}

int GadgetParams::delay(int j, const BitString &K) const {
    int d0 = dC + 2 * n + 3;
    if (j == 0) return d0;
    if (j == 1) return length(K) - d0;
    throw std::runtime_error("delay: side out of range");
}

bool GadgetGame::has(Fam f, int j, int i, int l) const {
    return index.count(std::make_tuple((int)f, j, i, l)) > 0;
}

int GadgetGame::id(Fam f, int j, int i, int l) const {
    auto it = index.find(std::make_tuple((int)f, j, i, l));
    if (it == index.end()) {
        VertexKey k{f, j, i, l};
        throw std::runtime_error("no vertex " + k.name());
    }
    return it->second;
}

int GadgetGame::gate_output_vertex(int gate, int j) const {
    if (gate >= 1 && gate <= params.n) // raw input: the other side's store
        return id(Fam::IoO, 1 - j, params.ck + gate);
    if (gate > params.n && gate <= params.ck + params.n) {
        if (circuit.at(gate).kind == GateKind::Or) return id(Fam::OrO, j, gate);
        return id(Fam::NotO, j, gate);
    }
    throw std::runtime_error("gate_output_vertex: no signal vertex for gate " +
                             std::to_string(gate));
}

namespace {

/* Two-pass assembly: register keys in a fixed order, then emit
 * priorities (with a global collision check) and edges. */
struct Builder {
    GadgetGame gg;
    std::vector<VertexKey> order;
    std::vector<int> depth_cache;

    int reg(Fam f, int j = 0, int i = 0, int l = 0) {
        VertexKey k{f, j, i, l};
        auto t = k.tup();
        if (gg.index.count(t))
            throw std::runtime_error("duplicate vertex " + k.name());
        int id = (int)order.size();
        gg.index[t] = id;
        order.push_back(k);
        return id;
    }

    std::vector<int> sides() const {
        switch (gg.params.kind) {
        case GameKind::ClockOnly: return {0};
        case GameKind::Full: return {0, 1};
        case GameKind::OptStrat: return {0, 1, 2};
        }
        return {};
    }

    void register_all() {
        const GadgetParams &P = gg.params;
        reg(Fam::X);
        for (int j : sides()) {
            int L = P.lane_of(j), W = P.bits_of(j);
            reg(Fam::ClkT0, j);
            for (int l = 1; l <= L; ++l) reg(Fam::ClkT, j, 0, l);
            for (int l = 1; l <= L; ++l) reg(Fam::ClkA, j, 0, l);
            for (int i = 1; i <= W; ++i) {
                reg(Fam::ClkD, j, i);
                reg(Fam::ClkE, j, i);
                reg(Fam::ClkG, j, i);
                reg(Fam::ClkK, j, i);
                reg(Fam::ClkF, j, i);
                reg(Fam::ClkH, j, i);
            }
            reg(Fam::ClkS, j);
            reg(Fam::ClkR, j);
        }
        if (P.kind == GameKind::ClockOnly) return;
        const CircuitSpec &c = gg.circuit;
        int L = P.lane;
        for (int j = 0; j <= 1; ++j) {
            for (int g = P.n + 1; g <= P.ck; ++g) {
                if (c.at(g).kind == GateKind::Or) {
                    reg(Fam::OrO, j, g);
                    continue;
                }
                for (int l = 0; l <= L; ++l) reg(Fam::NotT, j, g, l);
                for (int l = 1; l <= L; ++l) reg(Fam::NotA, j, g, l);
                reg(Fam::NotD, j, g);
                reg(Fam::NotE, j, g);
                reg(Fam::NotO, j, g);
                reg(Fam::NotH, j, g);
            }
            for (int b = 1; b <= P.n; ++b) {
                int phi = P.ck + b;
                for (int l = 0; l <= L; ++l) reg(Fam::IoT, j, phi, l);
                for (int l = 1; l <= L; ++l) reg(Fam::IoA, j, phi, l);
                reg(Fam::IoD, j, phi);
                reg(Fam::IoE, j, phi);
                reg(Fam::IoQ0, j, phi);
                reg(Fam::IoQ1, j, phi);
                reg(Fam::IoO, j, phi);
                reg(Fam::IoP, j, phi);
                reg(Fam::IoP1, j, phi);
                reg(Fam::IoH0, j, phi);
                reg(Fam::IoH1, j, phi);
                reg(Fam::IoH2, j, phi);
            }
            reg(Fam::MovY, j);
            reg(Fam::MovZ, j);
        }
        if (P.kind == GameKind::OptStrat) {
            int U = 2 * P.k + 4 * P.n + 9;
            for (int u = 1; u <= U; ++u) reg(Fam::Relay, 0, u);
        }
    }

    PriorityArgs args_of(const VertexKey &v) const {
        const GadgetParams &P = gg.params;
        int L = P.lane, dC = P.dC;
        int b = v.i - P.ck; // io families only
        switch (v.fam) {
        case Fam::X: return {0, 0, 0, 0, 1};
        case Fam::ClkT0: return {2, 0, P.lane_of(v.j) + 2, v.j, 0};
        case Fam::ClkT: return {2, 0, v.l, v.j, 1};
        case Fam::ClkA: return {2, 0, v.l + 1, v.j, 0};
        case Fam::ClkD: return {1, v.i, 0, v.j, 1};
        case Fam::ClkE: return {1, v.i, 1, v.j, 0};
        case Fam::ClkG: return {1, v.i, 2, v.j, 1};
        case Fam::ClkK: return {8, v.i, 0, v.j, 1};
        case Fam::ClkF: return {8, v.i, 1, v.j, 1};
        case Fam::ClkH: return {8, v.i, 2, v.j, 0};
        case Fam::ClkS: return {7, 0, 0, v.j, 0};
        case Fam::ClkR: return {7, 0, 1, v.j, 0};
        case Fam::OrO: return {4, v.i, 0, v.j, 1};
        case Fam::NotT:
            if (v.l == 0) return {5, v.i, L + 2, v.j, 0};
            return {5, v.i, v.l, v.j, 1};
        case Fam::NotA:
            if (v.l == gate_depth(v.i)) return {4, v.i, 0, v.j, 0};
            return {5, v.i, v.l + 1, v.j, 0};
        case Fam::NotD: return {4, v.i, 0, v.j, 1};
        case Fam::NotE: return {4, v.i, 1, v.j, 0};
        case Fam::NotO: return {6, v.i, 0, v.j, 1};
        case Fam::NotH: return {6, v.i, 1, v.j, 0};
        case Fam::IoT:
            if (v.l == 0) return {5, v.i, L + 2, v.j, 0};
            return {5, v.i, v.l, v.j, 1};
        case Fam::IoA: return {5, v.i, v.l + 1, v.j, 0};
        case Fam::IoD: return {4, v.i, 0, v.j, 1};
        case Fam::IoE: return {4, v.i, 1, v.j, 0};
        case Fam::IoQ0: return {4, v.i, 2, v.j, 0};
        case Fam::IoQ1: return {6, dC + 2, 2 * b, v.j, 0};
        case Fam::IoO: return {6, 0, 2 * b - 1, v.j, 1};
        case Fam::IoP: return {3, v.i, 2, v.j, 0};
        case Fam::IoP1: return {5, v.i, L + 3, v.j, 0};
        case Fam::IoH0: return {3, v.i, 3, v.j, 0};
        case Fam::IoH1: return {6, dC + 1, 2 * b, v.j, 0};
        case Fam::IoH2: return {6, 0, 2 * b, v.j, 0};
        case Fam::MovY: return {3, 0, 1, v.j, 0};
        case Fam::MovZ: return {3, 0, 0, v.j, 0};
        case Fam::Relay: return {0, 0, 0, v.i, 0};
        }
        throw std::runtime_error("args_of: unhandled family");
    }

    int gate_depth(int g) const { return depth_cache[g]; }

    static bool odd_side(Fam f) {
        return f == Fam::ClkE || f == Fam::NotE || f == Fam::IoE ||
               f == Fam::IoQ0;
    }

    void emit_vertices() {
        long long V = (long long)order.size();
        std::set<priority_t> seen;
        if (gg.params.kind != GameKind::ClockOnly)
            depth_cache = gg.circuit.depths();
        for (const VertexKey &v : order) {
            PriorityArgs a = args_of(v);
            priority_t p = pp(a, V);
            if (p <= 0) throw std::runtime_error("priority not positive at " +
                                                 v.name());
            if (!seen.insert(p).second)
                throw std::runtime_error("priority collision at " + v.name());
            Owner o = odd_side(v.fam) ? Owner::Odd : Owner::Even;
            gg.game.add(o, p, v.name());
            gg.key.push_back(v);
            gg.arg.push_back(a);
        }
        gg.x_id = gg.id(Fam::X);
    }

    int depth(int g) const { return depth_cache[g]; }

    void edge(int v, Fam f, int j = 0, int i = 0, int l = 0) {
        gg.game.add_edge(v, gg.id(f, j, i, l));
    }

    void clock_edges(int j) {
        const GadgetParams &P = gg.params;
        int L = P.lane_of(j), W = P.bits_of(j);
        {
            int v = gg.id(Fam::ClkT0, j);
            edge(v, Fam::ClkR, j);
            edge(v, Fam::ClkS, j);
        }
        for (int l = 1; l <= L; ++l) {
            int v = gg.id(Fam::ClkT, j, 0, l);
            edge(v, Fam::ClkR, j);
            edge(v, Fam::ClkS, j);
            if (l == 1) edge(v, Fam::ClkT0, j);
            else edge(v, Fam::ClkT, j, 0, l - 1);
        }
        for (int l = 1; l <= L; ++l)
            edge(gg.id(Fam::ClkA, j, 0, l), Fam::ClkT, j, 0, l);
        for (int i = 1; i <= W; ++i) {
            int v = gg.id(Fam::ClkD, j, i);
            edge(v, Fam::ClkE, j, i);
            edge(v, Fam::ClkS, j);
            edge(v, Fam::ClkR, j);
            int top = P.ladder_top(i);
            if (top > L)
                throw std::runtime_error("counter ladder exceeds lane");
            for (int l = 1; l <= top; ++l) edge(v, Fam::ClkA, j, 0, l);
            int e = gg.id(Fam::ClkE, j, i);
            if (!(gg.params.kind == GameKind::OptStrat && j == 2 && i == W))
                edge(e, Fam::ClkH, j, i);
            edge(e, Fam::ClkD, j, i);
            int g = gg.id(Fam::ClkG, j, i);
            edge(g, Fam::ClkF, j, i);
            edge(g, Fam::ClkK, j, i);
            int k = gg.id(Fam::ClkK, j, i);
            gg.game.add_edge(k, gg.x_id);
            for (int l = i + 1; l <= W; ++l) edge(k, Fam::ClkG, j, l);
            edge(gg.id(Fam::ClkF, j, i), Fam::ClkE, j, i);
            edge(gg.id(Fam::ClkH, j, i), Fam::ClkK, j, i);
        }
        {
            int s = gg.id(Fam::ClkS, j);
            gg.game.add_edge(s, gg.x_id);
            for (int l = 1; l <= W; ++l) edge(s, Fam::ClkF, j, l);
            int r = gg.id(Fam::ClkR, j);
            gg.game.add_edge(r, gg.x_id);
            for (int l = 1; l <= W; ++l) edge(r, Fam::ClkG, j, l);
        }
    }

    void circuit_edges(int j) {
        const GadgetParams &P = gg.params;
        const CircuitSpec &c = gg.circuit;
        int L = P.lane;
        for (int g = P.n + 1; g <= P.ck; ++g) {
            if (c.at(g).kind == GateKind::Or) {
                int v = gg.id(Fam::OrO, j, g);
                edge(v, Fam::ClkS, j);
                edge(v, Fam::ClkR, j);
                gg.game.add_edge(v, gg.gate_output_vertex(c.at(g).in1, j));
                gg.game.add_edge(v, gg.gate_output_vertex(c.at(g).in2, j));
                continue;
            }
            int D = depth(g);
            if (D < 1 || D > L)
                throw std::runtime_error("gate depth outside lane");
            for (int l = 0; l <= L; ++l) {
                int v = gg.id(Fam::NotT, j, g, l);
                if (l == D) {
                    gg.game.add_edge(v, gg.gate_output_vertex(c.at(g).in1, j));
                    continue;
                }
                edge(v, Fam::ClkR, j);
                edge(v, Fam::ClkS, j);
                if (l >= 1) edge(v, Fam::NotT, j, g, l - 1);
            }
            for (int l = 1; l <= L; ++l)
                edge(gg.id(Fam::NotA, j, g, l), Fam::NotT, j, g, l);
            int d = gg.id(Fam::NotD, j, g);
            edge(d, Fam::ClkS, j);
            edge(d, Fam::ClkR, j);
            edge(d, Fam::NotE, j, g);
            for (int l = 1; l <= L; ++l) edge(d, Fam::NotA, j, g, l);
            int e = gg.id(Fam::NotE, j, g);
            edge(e, Fam::NotH, j, g);
            edge(e, Fam::NotD, j, g);
            edge(gg.id(Fam::NotO, j, g), Fam::NotE, j, g);
            edge(gg.id(Fam::NotH, j, g), Fam::ClkR, j);
        }
        for (int b = 1; b <= P.n; ++b) {
            int phi = P.ck + b;
            int D = P.dC;
            for (int l = 0; l <= L; ++l) {
                int v = gg.id(Fam::IoT, j, phi, l);
                if (l == D) {
                    edge(v, Fam::IoP, j, phi);
                    continue;
                }
                edge(v, Fam::MovY, j);
                edge(v, Fam::MovZ, j);
                if (l >= 1) edge(v, Fam::IoT, j, phi, l - 1);
            }
            for (int l = 1; l <= L; ++l)
                edge(gg.id(Fam::IoA, j, phi, l), Fam::IoT, j, phi, l);
            int d = gg.id(Fam::IoD, j, phi);
            if (!(gg.params.kind == GameKind::OptStrat && j == 1 &&
                  b == gg.z)) {
                edge(d, Fam::MovY, j);
                edge(d, Fam::MovZ, j);
                edge(d, Fam::IoE, j, phi);
                for (int l = 1; l <= L; ++l) edge(d, Fam::IoA, j, phi, l);
            } else {
                int U = 2 * P.k + 4 * P.n + 9;
                for (int u = 1; u <= U; ++u) edge(d, Fam::Relay, 0, u);
            }
            int e = gg.id(Fam::IoE, j, phi);
            edge(e, Fam::IoH0, j, phi);
            edge(e, Fam::IoD, j, phi);
            int q0 = gg.id(Fam::IoQ0, j, phi);
            edge(q0, Fam::IoE, j, phi);
            edge(q0, Fam::IoQ1, j, phi);
            edge(gg.id(Fam::IoQ1, j, phi), Fam::ClkR, 1 - j);
            edge(gg.id(Fam::IoO, j, phi), Fam::IoQ0, j, phi);
            int p = gg.id(Fam::IoP, j, phi);
            int in = c.at(phi).in1;
            if (in <= P.n || in > P.ck)
                throw std::runtime_error(
                    "output gate must read an internal gate");
            gg.game.add_edge(p, gg.gate_output_vertex(in, j));
            edge(p, Fam::IoP1, j, phi);
            edge(gg.id(Fam::IoP1, j, phi), Fam::ClkR, 1 - j);
            int h0 = gg.id(Fam::IoH0, j, phi);
            edge(h0, Fam::IoH1, j, phi);
            edge(h0, Fam::IoH2, j, phi);
            edge(gg.id(Fam::IoH1, j, phi), Fam::ClkR, j);
            edge(gg.id(Fam::IoH2, j, phi), Fam::ClkR, 1 - j);
        }
        {
            int y = gg.id(Fam::MovY, j);
            edge(y, Fam::ClkR, 1 - j);
            edge(y, Fam::ClkR, j);
            int zz = gg.id(Fam::MovZ, j);
            edge(zz, Fam::ClkR, j);
            edge(zz, Fam::ClkS, j);
        }
    }

    /* Relay u -> original target of the replaced edge, in a fixed
     * numbering: 1 = y^1, 2 = z^1, 3 = e^1 of the watched bit, 3+l =
     * lane a_l of the watched bit. */
    int relay_target(int u) const {
        const GadgetParams &P = gg.params;
        int phi = P.ck + gg.z;
        if (u == 1) return gg.id(Fam::MovY, 1);
        if (u == 2) return gg.id(Fam::MovZ, 1);
        if (u == 3) return gg.id(Fam::IoE, 1, phi);
        return gg.id(Fam::IoA, 1, phi, u - 3);
    }

    void relay_edges() {
        int U = 2 * gg.params.k + 4 * gg.params.n + 9;
        for (int u = 1; u <= U; ++u) {
            int v = gg.id(Fam::Relay, 0, u);
            gg.game.add_edge(v, relay_target(u));
            edge(v, Fam::ClkF, 2, gg.params.n + 1);
        }
    }

    void build_edges() {
        gg.game.add_edge(gg.x_id, gg.x_id);
        for (int j : sides()) clock_edges(j);
        if (gg.params.kind == GameKind::ClockOnly) return;
        for (int j = 0; j <= 1; ++j) circuit_edges(j);
        if (gg.params.kind == GameKind::OptStrat) relay_edges();
    }
};

GadgetParams params_for(GameKind kind, const CircuitSpec &c) {
    GadgetParams P;
    P.kind = kind;
    P.n = c.n;
    P.ck = c.k();
    P.k = c.k();
    if (P.k - P.n < 1)
        throw std::runtime_error("circuit needs internal gates below the "
                                 "output layer");
    for (int b = 1; b <= c.n; ++b)
        if (c.at(c.output(b)).kind != GateKind::Not)
            throw std::runtime_error("store bits need a negated output layer");
    P.dC = c.out_depth();
    if (P.dC < 2) throw std::runtime_error("output layer too shallow");
    P.lane = 2 * P.k + 4 * P.n + 6;
    return P;
}

GadgetGame assemble(GameKind kind, const CircuitSpec &c, int z) {
    GadgetGame gg;
    gg.params = params_for(kind, c);
    gg.circuit = c;
    gg.z = z;
    Builder b;
    b.gg = std::move(gg);
    b.register_all();
    b.emit_vertices();
    b.build_edges();
    GadgetGame out = std::move(b.gg);
    out.game.validate();
    if (!out.game.strict())
        throw std::runtime_error("assembled game is not strict");
    out.notes = {
        "lane anchor t_0 uses slot 2k+4n+8: it must exceed every lane slot "
        "and may not reuse the a_{2k+4n+3} tuple",
        "io escape p_{i,1} uses slot 2k+4n+9: even, above all lane odds, "
        "below band 7, distinct from every a-slot",
        "io store/escape relays use band-6 slots o=(6,0,2b-1), "
        "h2=(6,0,2b), h1=(6,d+1,2b), q1=(6,d+2,2b) so a raised store "
        "outranks the rival side exactly at its own bit",
        "counter g_i carries the k_i edge its strategies require",
        "q_{i,1} escapes to the rival clock's r",
    };
    if (kind == GameKind::OptStrat) {
        out.notes.push_back("third clock has n+1 bits, lane 2k+4n+8, anchor "
                            "slot 2k+4n+10; its top escape e_{n+1} keeps "
                            "only the d edge");
        out.notes.push_back("watched d routes through relays v_u with edges "
                            "{original target, f^2_{n+1}}, priority 2u");
    }
    return out;
}

} // namespace

GadgetGame build_clock(int n, int k) {
    if (n < 1) throw std::runtime_error("build_clock: need n >= 1");
    Builder b;
    b.gg.params.kind = GameKind::ClockOnly;
    b.gg.params.n = n;
    b.gg.params.k = k;
    b.gg.params.ck = 0;
    b.gg.params.dC = 1;
    b.gg.params.lane = 2 * k + 4 * n + 6;
    b.register_all();
    b.emit_vertices();
    b.build_edges();
    GadgetGame out = std::move(b.gg);
    out.game.validate();
    if (!out.game.strict())
        throw std::runtime_error("assembled clock is not strict");
    return out;
}

static void check_inputs(const CircuitSpec &c, const BitString &B, int z) {
    validate(c, true);
    if ((int)B.size() != c.n + 1)
        throw std::runtime_error("store width does not match circuit");
    if (z < 1 || z > c.n) throw std::runtime_error("watched bit out of range");
}

BuildResult build(const CircuitSpec &c, const BitString &B, int z) {
    check_inputs(c, B, z);
    BuildResult r;
    r.gg = assemble(GameKind::Full, c, z);
    r.gg.B0 = B;
    int phi = r.gg.params.ck + z;
    r.gg.watched_from = r.gg.id(Fam::IoD, 0, phi);
    r.gg.watched_to = r.gg.id(Fam::IoE, 0, phi);
    BitString K1 = make_bits(c.n, 1);
    r.sigma0 = complete(r.gg, predict(r.gg, B, K1, 0, 2), FillMode::LowestId, 0);
    return r;
}

BuildResult build_optstrat(const CircuitSpec &c, const BitString &B, int z) {
    check_inputs(c, B, z);
    BuildResult r;
    r.gg = assemble(GameKind::OptStrat, c, z);
    r.gg.B0 = B;
    r.gg.watched_from = r.gg.id(Fam::IoD, 1, r.gg.params.ck + z);
    r.gg.watched_to = r.gg.id(Fam::Relay, 0, 3);
    BitString K1 = make_bits(c.n, 1);
    r.sigma0 = complete(r.gg, predict(r.gg, B, K1, 0, 2), FillMode::LowestId, 0);
    return r;
}

BinaryOrIds build_binary_or_gate(ParityGame &g, long long V, int i, int j,
                               int s, int r, int in1, int in2) {
    BinaryOrIds ids;
    ids.o = g.add(Owner::Even, pp({4, i, 0, j, 1}, V));
    ids.o1 = g.add(Owner::Even, pp({4, i, 1, j, 1}, V));
    ids.o2 = g.add(Owner::Even, pp({4, i, 2, j, 1}, V));
    g.add_edge(ids.o, s);
    g.add_edge(ids.o, ids.o1);
    g.add_edge(ids.o1, r);
    g.add_edge(ids.o1, ids.o2);
    g.add_edge(ids.o2, in1);
    g.add_edge(ids.o2, in2);
    return ids;
}

int binary_lane_length(int k, int n) { return 2 * k + 4 * n + 6 + 2 * k; }
int binary_input_slot(int d) { return 2 * d; }
int binary_delay_growth(int k) { return k; }

std::string GadgetGame::manifest() const {
    nlohmann::json m;
    m["parameters"] = {
        {"kind", params.kind == GameKind::Full        ? "full"
                 : params.kind == GameKind::ClockOnly ? "clock"
                                                      : "optstrat"},
        {"n", params.n},
        {"k", params.k},
        {"internal_gates", params.ck},
        {"depth", params.dC},
        {"lane", params.lane},
        {"vertices", game.size()},
        {"watched_bit", z},
    };
    if (watched_from >= 0)
        m["watched_edge"] = {
            {"from", {{"id", watched_from}, {"key", key[watched_from].name()}}},
            {"to", {{"id", watched_to}, {"key", key[watched_to].name()}}},
        };
    m["adjustments"] = notes;
    nlohmann::json verts = nlohmann::json::array();
    for (int v = 0; v < game.size(); ++v) {
        verts.push_back({
            {"id", v},
            {"key", key[v].name()},
            {"family", fam_name(key[v].fam)},
            {"j", key[v].j},
            {"i", key[v].i},
            {"l", key[v].l},
            {"priority", game.pri[v]},
            {"owner", game.owner[v] == Owner::Even ? 0 : 1},
            {"pp", {arg[v].c, arg[v].i, arg[v].l, arg[v].j, arg[v].e}},
        });
    }
    m["vertices"] = std::move(verts);
    return m.dump(1);
}

} // namespace silab
