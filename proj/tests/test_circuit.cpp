#include <doctest.h>

#include <random>

#include "silab/circuit.hpp"

using namespace silab;

namespace {

CircuitSpec random_raw_circuit(std::mt19937 &rng, int n, int k) {
    CircuitSpec c;
    c.n = n;
    c.gates.resize(n + 1);
    for (int i = n + 1; i <= n + k; i++) {
        Gate g;
        if (rng() % 2) {
            g.kind = GateKind::Not;
            g.in1 = 1 + (int)(rng() % (i - 1));
        } else {
            g.kind = GateKind::Or;
            g.in1 = 1 + (int)(rng() % (i - 1));
            g.in2 = 1 + (int)(rng() % (i - 1));
        }
        c.gates.push_back(g);
    }
    return c;
}

CircuitSpec const_true_circuit(int n) {
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
    std::vector<int> lifted(n + 1), negated(n + 1);
    for (int i = 1; i <= n; i++) {
        lifted[i] = emit(GateKind::Or, i, i);
        negated[i] = emit(GateKind::Not, i, 0);
    }
    for (int i = 1; i <= n; i++) emit(GateKind::Or, lifted[i], negated[i]);
    validate(c, true);
    return c;
}

} // namespace

TEST_SUITE_BEGIN("circuit");

TEST_CASE("validation catches the right defects") {
    CHECK_NOTHROW(validate(identity_circuit(3), true));

    CircuitSpec fwd;
    fwd.n = 1;
    fwd.gates.resize(2);
    fwd.gates.push_back({GateKind::Not, 3, 0}); // references a later gate
    fwd.gates.push_back({GateKind::Not, 2, 0});
    CHECK_THROWS(validate(fwd, false));

    CircuitSpec uneven;
    uneven.n = 1;
    uneven.gates.resize(2);
    uneven.gates.push_back({GateKind::Not, 1, 0});          // depth 1
    uneven.gates.push_back({GateKind::Not, 2, 0});          // depth 2
    uneven.gates.push_back({GateKind::Or, 1, 3});           // arms 0 and 2
    CHECK_NOTHROW(validate(uneven, false));
    CHECK_THROWS(validate(uneven, true));
}

TEST_CASE("padding: normal circuits unchanged, uneven arms get dummies") {
    CircuitSpec id = identity_circuit(2);
    CircuitSpec padded = pad_depths(id);
    CHECK(padded.gates.size() == id.gates.size());
    CHECK(padded.k() == id.k());

    CircuitSpec uneven;
    uneven.n = 1;
    uneven.gates.resize(2);
    uneven.gates.push_back({GateKind::Not, 1, 0});
    uneven.gates.push_back({GateKind::Not, 2, 0});
    uneven.gates.push_back({GateKind::Or, 1, 3}); // depth 0 arm vs depth 2 arm
    CircuitSpec fixed = pad_depths(uneven);
    CHECK_NOTHROW(validate(fixed, true));
    CHECK(fixed.k() > uneven.k()); // dummies were inserted
}

TEST_CASE("padding preserves evaluation on every input") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 300; trial++) {
        int n = 1 + trial % 3;
        CircuitSpec raw = random_raw_circuit(rng, n, (int)(rng() % 7));
        CircuitSpec norm = pad_depths(raw);
        CHECK_NOTHROW(validate(norm, true));
        for (unsigned long long x = 0; x < (1ull << n); x++) {
            BitString b = make_bits(n, x);
            CHECK(apply_circuit(raw, b) == apply_circuit(norm, b));
        }
    }
}

TEST_CASE("negation complements every output bit") {
    CircuitSpec ct = const_true_circuit(2);
    CircuitSpec cf = negate(ct);
    for (unsigned long long x = 0; x < 4; x++) {
        CHECK(bits_value(apply_circuit(ct, make_bits(2, x))) == 3);
        CHECK(bits_value(apply_circuit(cf, make_bits(2, x))) == 0);
    }

    std::mt19937 rng(67);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + trial % 3;
        CircuitSpec c = pad_depths(random_raw_circuit(rng, n, (int)(rng() % 7)));
        CircuitSpec nc = negate(c);
        CircuitSpec nnc = negate(nc);
        for (unsigned long long x = 0; x < (1ull << n); x++) {
            BitString b = make_bits(n, x);
            BitString fb = apply_circuit(c, b), nfb = apply_circuit(nc, b);
            for (int i = 1; i <= n; i++) CHECK(nfb[i] == 1 - fb[i]);
            CHECK(apply_circuit(nnc, b) == fb);
        }
    }
}

TEST_CASE("iteration") {
    CircuitSpec id = identity_circuit(3);
    BitString b = make_bits(3, 5);
    CHECK(iterate(id, b, 0) == b);
    CHECK(iterate(id, b, 9) == b);
    CHECK_THROWS(iterate(id, b, -1));

    CircuitSpec inc = increment_mod4_circuit();
    CHECK(bits_value(iterate(inc, make_bits(2, 0), 3)) == 3);
    for (unsigned long long x = 0; x < 4; x++)
        CHECK(bits_value(apply_circuit(inc, make_bits(2, x))) == (x + 1) % 4);
}

TEST_CASE("decision oracles against direct orbit enumeration") {
    CircuitSpec ct = const_true_circuit(2);
    CHECK(bitswitch_oracle(ct, make_bits(2, 0), 1));
    CHECK(bitswitch_oracle(ct, make_bits(2, 0), 2));
    CHECK(circuitvalue_oracle(ct, make_bits(2, 0), 1));

    CircuitSpec id = identity_circuit(2);
    CHECK(!bitswitch_oracle(id, make_bits(2, 0), 1));
    CHECK(!circuitvalue_oracle(id, make_bits(2, 0), 1));
    CHECK(bitswitch_oracle(id, make_bits(2, 3), 2));

    // Any circuit: compare against a literal re-enumeration of the orbit.
    std::mt19937 rng(71);
    for (int trial = 0; trial < 60; trial++) {
        int n = 1 + trial % 2;
        CircuitSpec c = pad_depths(random_raw_circuit(rng, n, (int)(rng() % 6)));
        for (unsigned long long x = 0; x < (1ull << n); x++) {
            for (int z = 1; z <= n; z++) {
                BitString b = make_bits(n, x);
                bool expect = false;
                BitString cur = b;
                for (long long i = 1; i <= (1ll << n); i++) {
                    cur = apply_circuit(c, cur);
                    if (i % 2 == 0 && cur[z]) expect = true;
                }
                CHECK(bitswitch_oracle(c, b, z) == expect);
                CHECK(circuitvalue_oracle(c, b, z) == (cur[z] == 1));
            }
        }
    }
}

TEST_CASE("json round trip") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 40; trial++) {
        CircuitSpec c = random_raw_circuit(rng, 1 + trial % 3, (int)(rng() % 6));
        std::string text = circuit_to_json(c);
        CircuitSpec d = circuit_from_json(text);
        CHECK(d.n == c.n);
        REQUIRE(d.gates.size() == c.gates.size());
        for (int i = 1; i <= c.last(); i++) {
            CHECK(d.gates[i].kind == c.gates[i].kind);
            CHECK(d.gates[i].in1 == c.gates[i].in1);
            CHECK(d.gates[i].in2 == c.gates[i].in2);
        }
        CHECK(circuit_to_json(d) == text);
    }
    CHECK_THROWS(circuit_from_json("{\"n\": 1, \"gates\": [{\"kind\": \"nand\"}]}"));
}

TEST_SUITE_END();
