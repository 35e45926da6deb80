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

namespace silab {

enum class GateKind { Input, Or, Not };

struct Gate {
    GateKind kind = GateKind::Input;
    int in1 = 0; // 1-based gate index, 0 when absent
    int in2 = 0; // Or gates only
};

/**
 * Boolean circuit computing F : {0,1}^n -> {0,1}^n. Gates are indexed
 * 1..n+k, the first n are the inputs, the last n carry the output bits
 * (output bit i lives at gate k+i). When the circuit is applied to its
 * own output, input bit i copies from gate wire(i) = k+i.
 */
struct CircuitSpec {
    int n = 0;
    std::vector<Gate> gates; // gates[0] unused; gates[1..n+k]

    int k() const { return (int)gates.size() - 1 - n; }
    int last() const { return (int)gates.size() - 1; }
    int output(int bit) const { return k() + bit; } // 1 <= bit <= n
    int wire(int input) const { return k() + input; }
    bool is_output(int i) const { return i > k() && i <= k() + n; }
    const Gate &at(int i) const { return gates[i]; }

    /* Longest distance to an input, per gate; inputs are at depth 0. */
    std::vector<int> depths() const;
    /* Common output depth; only meaningful on normalized circuits. */
    int out_depth() const { return depths()[output(1)]; }
};

using BitString = std::vector<int>; // 1-indexed: bits[1..n], bits[0] unused

BitString make_bits(int n, unsigned long long value); // bit 1 = LSB
unsigned long long bits_value(const BitString &b);
std::string bits_text(const BitString &b); // "b1 b2 ..." as 0/1 chars

/**
 * Structural check: first n gates are inputs, later gates are Or or Not
 * with smaller gate indices as inputs. With normalized = true, also: both
 * arms of every Or gate sit at one depth, and all output bits sit at one
 * common positive depth. Throws naming the offending gate.
 */
void validate(const CircuitSpec &c, bool normalized);

/**
 * Equalize Or arm depths and output depths by inserting dummy Or gates
 * (both arms wired to the padded gate). Output values land on the last
 * n gates in bit order. Evaluation is preserved on every input. Already
 * normalized circuits are returned unchanged.
 */
CircuitSpec pad_depths(const CircuitSpec &c);

/* Append one Not per output bit: the result computes the bitwise
 * complement. Normalization is preserved. */
CircuitSpec negate(const CircuitSpec &c);

/* Truth value of one gate / all gates under input B. */
int eval_gate(const CircuitSpec &c, const BitString &b, int gate);
std::vector<int> eval_all(const CircuitSpec &c, const BitString &b);

BitString apply_circuit(const CircuitSpec &c, const BitString &b);
BitString iterate(const CircuitSpec &c, const BitString &b, long long t);

/* Is bit z of F^i(B) ever 1 at an even iterate i in {2, ..., 2^n}? */
bool bitswitch_oracle(const CircuitSpec &c, const BitString &b, int z);

/* Is bit z of F^{2^n}(B) equal to 1? */
bool circuitvalue_oracle(const CircuitSpec &c, const BitString &b, int z);

/* Circuit JSON: {"n": n, "gates": [{"kind": "input"|"or"|"not",
 * "in1": i, "in2": j}, ...]} with 1-based indices, inputs first. */
CircuitSpec circuit_from_json(const std::string &text);
std::string circuit_to_json(const CircuitSpec &c);
CircuitSpec load_circuit(const std::string &path);

/* Stock circuits used throughout the test suites (already normalized). */
CircuitSpec identity_circuit(int n);       // Not-Not chains, depth 2
CircuitSpec set_bit_circuit(int n, int z); // copies, but output z stuck at 1
CircuitSpec increment_mod4_circuit();      // n = 2 binary counter

} // namespace silab
