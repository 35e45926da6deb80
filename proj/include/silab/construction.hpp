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

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "silab/circuit.hpp"
#include "silab/game.hpp"

namespace silab {

/**
 * Vertex families of the gadget game. Clock families exist once per
 * clock; gate families once per internal circuit gate; io families once
 * per output bit; mover families once per circuit side. Relay is the
 * v_u layer of the optimal-strategy variant.
 */
enum class Fam : int {
    X = 0,
    ClkT0, ClkT, ClkA, ClkD, ClkE, ClkG, ClkK, ClkF, ClkH, ClkS, ClkR,
    OrO,
    NotT, NotA, NotD, NotE, NotO, NotH,
    IoT, IoA, IoD, IoE, IoQ0, IoQ1, IoO, IoP, IoP1, IoH0, IoH1, IoH2,
    MovY, MovZ,
    Relay,
};

const char *fam_name(Fam f);

/**
 * Symbolic vertex identity: family + clock/circuit side j, unit index i
 * (counter bit, gate index, or relay number), lane index l. Bijective
 * with vertex ids in every build; the inverse map ships in the manifest.
 */
struct VertexKey {
    Fam fam = Fam::X;
    int j = 0;
    int i = 0;
    int l = 0;

    std::string name() const;

    std::tuple<int, int, int, int> tup() const {
        return {(int)fam, j, i, l};
    }
    bool operator==(const VertexKey &o) const { return tup() == o.tup(); }
    bool operator<(const VertexKey &o) const { return tup() < o.tup(); }
};

/**
 * Arguments of the priority map. Band c is the lexicographically
 * dominant component, then unit i, then lane slot l; j and e separate
 * clock sides and parities. e is the priority's parity.
 */
struct PriorityArgs {
    int c = 0, i = 0, l = 0, j = 0, e = 0;
};

/* 6c|V|^2 + 6i|V| + 6l + 2j + e, exact. Throws on out-of-range args. */
priority_t pp(const PriorityArgs &a, long long V);

enum class GameKind { Full, ClockOnly, OptStrat };

/**
 * Shared arithmetic of the construction. k is the internal non-output
 * gate count of the compiled circuit, dC the depth of the gates feeding
 * the outputs, lane = 2k+4n+6 the deceleration lane length. The third
 * clock of the optimal-strategy variant has n+1 bits and lane lane+2.
 */
struct GadgetParams {
    GameKind kind = GameKind::Full;
    int n = 0;
    int k = 0;
    int ck = 0; // internal gate count of the circuit, outputs included
    int dC = 0;
    int lane = 0;

    int lane_of(int j) const { return j == 2 ? lane + 2 : lane; }
    int bits_of(int j) const { return j == 2 ? n + 1 : n; }
    /* Top rung of counter bit i's ladder: 2k+2n+6+2i. */
    int ladder_top(int i) const { return 2 * k + 2 * n + 6 + 2 * i; }

    int length(const BitString &K) const;
    int delay(int j, const BitString &K) const;
};

/* Least significant zero (1-based); absent on all-ones. */
std::optional<int> lsz(const BitString &K);
/* Smallest set index above i; absent when none. */
std::optional<int> nexbit(const BitString &K, int i);
/* Counter value of the other clock: K-1 when j = 0, K when j = 1. */
BitString oc(const BitString &K, int j);
BitString bits_increment(const BitString &K);
BitString bits_decrement(const BitString &K);

/**
 * The compiled gadget game: two clocked counters, one gadget per
 * internal circuit gate, an io gadget per output bit, movers wiring the
 * two circuit copies together, and the central sink x. The watched edge
 * is the io d -> e edge of the monitored bit (its relay in the
 * optimal-strategy variant).
 */
struct GadgetGame {
    ParityGame game;
    CircuitSpec circuit; // compiled (already negated) circuit; empty for clocks
    BitString B0;        // store contents the build started from
    int z = 0;           // monitored output bit
    GadgetParams params;

    std::vector<VertexKey> key;    // id -> key
    std::vector<PriorityArgs> arg; // id -> priority arguments
    std::map<std::tuple<int, int, int, int>, int> index;

    int x_id = -1;
    int watched_from = -1;
    int watched_to = -1;
    std::vector<std::string> notes; // table adjustments applied, for the manifest

    bool has(Fam f, int j = 0, int i = 0, int l = 0) const;
    int id(Fam f, int j = 0, int i = 0, int l = 0) const; // throws if absent

    /* Gadget vertex holding the named gate's output signal on side j. */
    int gate_output_vertex(int gate, int j) const;

    std::string manifest() const; // JSON: params, key table, watched edge
};

struct BuildResult {
    GadgetGame gg;
    Strategy sigma0;
};

/**
 * Compile a normalized negated circuit plus initial store B and watched
 * bit z into the gadget game and its initial strategy. The circuit must
 * pass validate(c, true) and every output gate must read an internal
 * gate. Throws on priority collisions and malformed circuits.
 */
BuildResult build(const CircuitSpec &c, const BitString &B, int z);

/* The optimal-strategy variant: third clock, removed escape, v_u relays. */
BuildResult build_optstrat(const CircuitSpec &c, const BitString &B, int z);

/* One clock (side 0) plus x; the clock subgame is closed. */
GadgetGame build_clock(int n, int k = 0);

/* Binary Or gadget: three chained out-degree-2 vertices. */
struct BinaryOrIds {
    int o = -1, o1 = -1, o2 = -1;
};
BinaryOrIds build_binary_or_gate(ParityGame &g, long long V, int i, int j,
                               int s, int r, int in1, int in2);

/* Arithmetic of the binary variant's change list. */
int binary_lane_length(int k, int n);  // lanes grow by 2k
int binary_input_slot(int d);          // input rung d -> 2d
int binary_delay_growth(int k);        // delays grow by k

} // namespace silab
