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

#include "silab/circuit.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace silab {

std::vector<int> CircuitSpec::depths() const {
    std::vector<int> d(gates.size(), 0);
    for (int i = n + 1; i <= last(); i++) {
        const Gate &g = gates[i];
        d[i] = 1 + (g.kind == GateKind::Or ? std::max(d[g.in1], d[g.in2])
                                           : d[g.in1]);
    }
    return d;
}

BitString make_bits(int n, unsigned long long value) {
    BitString b(n + 1, 0);
    for (int i = 1; i <= n; i++) b[i] = (int)((value >> (i - 1)) & 1);
    return b;
}

unsigned long long bits_value(const BitString &b) {
    unsigned long long v = 0;
    for (size_t i = 1; i < b.size(); i++)
        if (b[i]) v |= 1ull << (i - 1);
    return v;
}

std::string bits_text(const BitString &b) {
    std::string s;
    for (size_t i = 1; i < b.size(); i++) s += b[i] ? '1' : '0';
    return s;
}

namespace {

[[noreturn]] void bad_gate(int i, const std::string &what) {
    throw std::runtime_error("circuit: gate " + std::to_string(i) + ": " + what);
}

} // namespace

void validate(const CircuitSpec &c, bool normalized) {
    if (c.n < 1) throw std::runtime_error("circuit: needs at least one input");
    if (c.last() < c.n)
        throw std::runtime_error("circuit: fewer gates than inputs");
    for (int i = 1; i <= c.last(); i++) {
        const Gate &g = c.gates[i];
        if (i <= c.n) {
            if (g.kind != GateKind::Input) bad_gate(i, "must be an input");
            continue;
        }
        if (g.kind == GateKind::Input) bad_gate(i, "input above position n");
        if (g.in1 < 1 || g.in1 >= i) bad_gate(i, "first input not topological");
        if (g.kind == GateKind::Or && (g.in2 < 1 || g.in2 >= i))
            bad_gate(i, "second input not topological");
    }
    if (!normalized) return;

    if (c.k() < c.n)
        throw std::runtime_error("circuit: outputs overlap inputs (k < n)");
    std::vector<int> d = c.depths();
    for (int i = c.n + 1; i <= c.last(); i++) {
        const Gate &g = c.gates[i];
        if (g.kind == GateKind::Or && d[g.in1] != d[g.in2])
            bad_gate(i, "or-gate arms at unequal depths");
    }
    int dc = d[c.output(1)];
    if (dc < 1) throw std::runtime_error("circuit: output depth must be >= 1");
    for (int bit = 2; bit <= c.n; bit++)
        if (d[c.output(bit)] != dc) bad_gate(c.output(bit), "output depth differs");
}

namespace {

bool is_normalized(const CircuitSpec &c) {
    try {
        validate(c, true);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

/* Incremental builder used by pad_depths: emits gates, tracks depths. */
struct Rebuild {
    CircuitSpec out;
    std::vector<int> depth{0}; // parallel to out.gates

    explicit Rebuild(int n) {
        out.n = n;
        out.gates.resize(n + 1);
        depth.assign(n + 1, 0);
    }
    int emit(GateKind kind, int a, int b) {
        Gate g;
        g.kind = kind;
        g.in1 = a;
        g.in2 = kind == GateKind::Or ? b : 0;
        out.gates.push_back(g);
        depth.push_back(1 + (kind == GateKind::Or
                                 ? std::max(depth[a], depth[b])
                                 : depth[a]));
        return (int)out.gates.size() - 1;
    }
    /* Dummy or-chain lifting gate a to the target depth. */
    int lift(int a, int target) {
        while (depth[a] < target) a = emit(GateKind::Or, a, a);
        return a;
    }
};

} // namespace

CircuitSpec pad_depths(const CircuitSpec &c) {
    validate(c, false);
    if (is_normalized(c)) return c;

    Rebuild rb(c.n);
    std::vector<int> map(c.gates.size()); // old index -> new index
    for (int i = 1; i <= c.n; i++) map[i] = i;
    for (int i = c.n + 1; i <= c.last(); i++) {
        const Gate &g = c.gates[i];
        if (g.kind == GateKind::Not) {
            map[i] = rb.emit(GateKind::Not, map[g.in1], 0);
        } else {
            int a = map[g.in1], b = map[g.in2];
            int t = std::max(rb.depth[a], rb.depth[b]);
            map[i] = rb.emit(GateKind::Or, rb.lift(a, t), rb.lift(b, t));
        }
    }

    // Output bits must end up on the last n gates, in order, at one common
    // depth of at least 1, feeding nothing. Lifting everyone to the deepest
    // bit and then emitting one fresh final layer satisfies all of that.
    std::vector<int> bitgate(c.n + 1);
    int deepest = 0;
    for (int bit = 1; bit <= c.n; bit++) {
        bitgate[bit] = map[c.output(bit)];
        deepest = std::max(deepest, rb.depth[bitgate[bit]]);
    }
    for (int bit = 1; bit <= c.n; bit++)
        bitgate[bit] = rb.lift(bitgate[bit], deepest);
    for (int bit = 1; bit <= c.n; bit++)
        rb.emit(GateKind::Or, bitgate[bit], bitgate[bit]);

    validate(rb.out, true);
    return rb.out;
}

CircuitSpec negate(const CircuitSpec &c) {
    validate(c, true);
    CircuitSpec out = c;
    int k = c.k();
    for (int bit = 1; bit <= c.n; bit++) {
        Gate g;
        g.kind = GateKind::Not;
        g.in1 = k + bit; // the old output bit
        out.gates.push_back(g);
    }
    validate(out, true);
    return out;
}

std::vector<int> eval_all(const CircuitSpec &c, const BitString &b) {
    if ((int)b.size() != c.n + 1)
        throw std::runtime_error("circuit: input width mismatch");
    std::vector<int> v(c.gates.size(), 0);
    for (int i = 1; i <= c.n; i++) v[i] = b[i] ? 1 : 0;
    for (int i = c.n + 1; i <= c.last(); i++) {
        const Gate &g = c.gates[i];
        v[i] = g.kind == GateKind::Or ? (v[g.in1] | v[g.in2]) : (1 - v[g.in1]);
    }
    return v;
}

int eval_gate(const CircuitSpec &c, const BitString &b, int gate) {
    if (gate < 1 || gate > c.last())
        throw std::runtime_error("circuit: gate index out of range");
    return eval_all(c, b)[gate];
}

BitString apply_circuit(const CircuitSpec &c, const BitString &b) {
    std::vector<int> v = eval_all(c, b);
    BitString out(c.n + 1, 0);
    for (int bit = 1; bit <= c.n; bit++) out[bit] = v[c.output(bit)];
    return out;
}

BitString iterate(const CircuitSpec &c, const BitString &b, long long t) {
    if (t < 0) throw std::runtime_error("circuit: negative iteration count");
    BitString cur = b;
    for (long long i = 0; i < t; i++) cur = apply_circuit(c, cur);
    return cur;
}

namespace {

void check_iteration_budget(const CircuitSpec &c) {
    if (c.n > 20)
        throw std::runtime_error(
            "circuit: 2^n iteration budget exceeded (n > 20)");
}

} // namespace

bool bitswitch_oracle(const CircuitSpec &c, const BitString &b, int z) {
    check_iteration_budget(c);
    if (z < 1 || z > c.n) throw std::runtime_error("circuit: bad bit index");
    BitString cur = b;
    long long steps = 1ll << c.n;
    for (long long i = 1; i <= steps; i++) {
        cur = apply_circuit(c, cur);
        if (i % 2 == 0 && cur[z] == 1) return true;
    }
    return false;
}

bool circuitvalue_oracle(const CircuitSpec &c, const BitString &b, int z) {
    check_iteration_budget(c);
    if (z < 1 || z > c.n) throw std::runtime_error("circuit: bad bit index");
    return iterate(c, b, 1ll << c.n)[z] == 1;
}

CircuitSpec circuit_from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CircuitSpec c;
    c.n = j.at("n").get<int>();
    c.gates.resize(1);
    for (const auto &jg : j.at("gates")) {
        Gate g;
        std::string kind = jg.at("kind").get<std::string>();
        if (kind == "input") {
            g.kind = GateKind::Input;
        } else if (kind == "or") {
            g.kind = GateKind::Or;
            g.in1 = jg.at("in1").get<int>();
            g.in2 = jg.at("in2").get<int>();
        } else if (kind == "not") {
            g.kind = GateKind::Not;
            g.in1 = jg.at("in1").get<int>();
        } else {
            throw std::runtime_error("circuit: unknown gate kind '" + kind + "'");
        }
        c.gates.push_back(g);
    }
    validate(c, false);
    return c;
}

std::string circuit_to_json(const CircuitSpec &c) {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["gates"] = nlohmann::ordered_json::array();
    for (int i = 1; i <= c.last(); i++) {
        const Gate &g = c.gates[i];
        nlohmann::ordered_json jg;
        switch (g.kind) {
        case GateKind::Input: jg["kind"] = "input"; break;
        case GateKind::Or:
            jg["kind"] = "or";
            jg["in1"] = g.in1;
            jg["in2"] = g.in2;
            break;
        case GateKind::Not:
            jg["kind"] = "not";
            jg["in1"] = g.in1;
            break;
        }
        j["gates"].push_back(jg);
    }
    return j.dump(2) + "\n";
}

CircuitSpec load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return circuit_from_json(ss.str());
}

CircuitSpec identity_circuit(int n) {
    CircuitSpec c;
    c.n = n;
    c.gates.resize(n + 1);
    for (int i = 1; i <= n; i++) {
        Gate g;
        g.kind = GateKind::Not;
        g.in1 = i;
        c.gates.push_back(g);
    }
    for (int i = 1; i <= n; i++) {
        Gate g;
        g.kind = GateKind::Not;
        g.in1 = n + i;
        c.gates.push_back(g);
    }
    validate(c, true);
    return c;
}

CircuitSpec set_bit_circuit(int n, int z) {
    CircuitSpec c;
    c.n = n;
    c.gates.resize(n + 1);
    auto emit = [&](GateKind k, int a, int b) {
        Gate g;
        g.kind = k;
        g.in1 = a;
        g.in2 = k == GateKind::Or ? b : 0;
        c.gates.push_back(g);
        return (int)c.gates.size() - 1;
    };
    // Intermediates: per copied bit one Not; for bit z a lifted input and
    // its negation, whose Or is constant 1.
    std::vector<int> pre(n + 1);
    int zdummy = -1, znot = -1;
    for (int i = 1; i <= n; i++) {
        if (i == z) {
            zdummy = emit(GateKind::Or, i, i);  // depth 1
            znot = emit(GateKind::Not, i, 0);   // depth 1
        } else {
            pre[i] = emit(GateKind::Not, i, 0); // depth 1
        }
    }
    for (int i = 1; i <= n; i++) {
        if (i == z)
            emit(GateKind::Or, zdummy, znot); // x or not-x: always 1, depth 2
        else
            emit(GateKind::Not, pre[i], 0); // double negation, depth 2
    }
    validate(c, true);
    return c;
}

CircuitSpec increment_mod4_circuit() {
    CircuitSpec c;
    c.n = 2;
    c.gates.resize(3);
    auto emit = [&](GateKind k, int a, int b) {
        Gate g;
        g.kind = k;
        g.in1 = a;
        g.in2 = k == GateKind::Or ? b : 0;
        c.gates.push_back(g);
        return (int)c.gates.size() - 1;
    };
    // Output bit 1 = not b1; output bit 2 = b1 xor b2, built from or/not.
    int na = emit(GateKind::Not, 1, 0);       // depth 1
    int nb = emit(GateKind::Not, 2, 0);       // depth 1
    int o1 = emit(GateKind::Or, 1, 2);        // depth 1
    int no1 = emit(GateKind::Not, o1, 0);     // depth 2: neither bit set
    int o2 = emit(GateKind::Or, na, nb);      // depth 2
    int no2 = emit(GateKind::Not, o2, 0);     // depth 3: both bits set
    int no1l = emit(GateKind::Or, no1, no1);  // depth 3
    int xnor = emit(GateKind::Or, no1l, no2); // depth 4
    int nal = emit(GateKind::Or, na, na);     // depth 2
    int nal2 = emit(GateKind::Or, nal, nal);  // depth 3
    int nal3 = emit(GateKind::Or, nal2, nal2);// depth 4
    emit(GateKind::Or, nal3, nal3);           // output 1: not b1, depth 5
    emit(GateKind::Not, xnor, 0);             // output 2: xor, depth 5
    validate(c, true);
    return c;
}

} // namespace silab
