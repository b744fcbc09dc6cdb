// Copyright 2026 The permlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "permlab/qsim.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "permlab/algorithms.hpp"
#include "permlab/errors.hpp"
#include "permlab/function_table.hpp"

using namespace permlab;

namespace {

double distance(const StateVector& a, const StateVector& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return d;
}

}  // namespace

TEST(state_vector, basics) {
    const StateVector s(3);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s.probability(0), 1.0);
    EXPECT_EQ(StateVector::basis(2, 3).probability(3), 1.0);
    EXPECT_THROW(StateVector(kMaxQubits + 1), LimitExceeded);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), InvalidInput);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InvalidInput);
}

TEST(gates, single_qubit_actions) {
    const double r = 1.0 / std::sqrt(2.0);
    auto h = run(Circuit(1).h(0), StateVector(1));
    EXPECT_NEAR(h.amplitudes()[0].real(), r, 1e-15);
    EXPECT_NEAR(h.amplitudes()[1].real(), r, 1e-15);
    auto zx = run(Circuit(1).x(0).z(0), StateVector(1));
    EXPECT_NEAR(zx.amplitudes()[1].real(), -1.0, 1e-15);
    auto t = run(Circuit(1).x(0).t(0), StateVector(1));
    EXPECT_NEAR(std::arg(t.amplitudes()[1]), M_PI / 4, 1e-15);
    auto tt = run(Circuit(1).x(0).t(0).tdg(0), StateVector(1));
    EXPECT_NEAR(std::abs(tt.amplitudes()[1] - Amplitude(1, 0)), 0.0, 1e-15);
}

TEST(gates, controlled_actions_on_basis_states) {
    // Qubit i is bit i of the index.
    EXPECT_EQ(run(Circuit(2).cnot(0, 1), StateVector::basis(2, 1)).probability(3), 1.0);
    EXPECT_EQ(run(Circuit(2).cnot(0, 1), StateVector::basis(2, 2)).probability(2), 1.0);
    EXPECT_EQ(run(Circuit(3).ccnot(0, 1, 2), StateVector::basis(3, 3)).probability(7), 1.0);
    EXPECT_EQ(run(Circuit(3).ccnot(0, 1, 2), StateVector::basis(3, 1)).probability(1), 1.0);
    EXPECT_EQ(run(Circuit(2).swap(0, 1), StateVector::basis(2, 1)).probability(2), 1.0);
    EXPECT_EQ(run(Circuit(3).cswap(0, 1, 2), StateVector::basis(3, 3)).probability(5), 1.0);
    EXPECT_EQ(run(Circuit(3).cswap(0, 1, 2), StateVector::basis(3, 2)).probability(2), 1.0);
}

TEST(gates, reject_bad_qubits) {
    Circuit c(2);
    EXPECT_THROW(c.x(2), IndexOutOfRange);
    EXPECT_THROW(c.cnot(1, 1), InvalidInput);
}

TEST(circuit, preserves_norm_and_inverts) {
    std::mt19937_64 rng(51);
    Circuit c(4);
    c.h(0).t(1).cnot(0, 2).ccnot(1, 2, 3).cswap(3, 0, 1).z(2).h(3).swap(1, 2).tdg(0).x(1);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector s = random_state(4, rng);
        const StateVector out = run(c, s);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
        EXPECT_LT(distance(run(c.inverse(), out), s), 1e-12);
    }
}

TEST(circuit, oracle_is_an_involution) {
    std::mt19937_64 rng(52);
    auto f = std::make_shared<FunctionTable>(random_simon(3, rng));
    const unsigned in[] = {0, 1, 2};
    const unsigned out[] = {3, 4, 5};
    Circuit c(6);
    c.oracle(f, in, out);
    for (std::uint64_t x = 0; x < 8; ++x) {
        for (std::uint64_t y = 0; y < 8; ++y) {
            const auto once = run(c, StateVector::basis(6, x | y << 3));
            ASSERT_EQ(once.probability(x | (y ^ (*f)(x)) << 3), 1.0);
        }
    }
    const StateVector s = random_state(6, rng);
    EXPECT_LT(distance(run(c, run(c, s)), s), 1e-15);
}

TEST(circuit, parses_text) {
    const Circuit c = parse_circuit("# bell pair\nQUBITS 2\nH 0\nCNOT 0 1\n");
    EXPECT_EQ(c.num_qubits(), 2u);
    const auto s = run(c, StateVector(2));
    EXPECT_NEAR(s.probability(0), 0.5, 1e-12);
    EXPECT_NEAR(s.probability(3), 0.5, 1e-12);
    EXPECT_THROW(parse_circuit("QUBITS 1\nFOO 0\n"), InvalidInput);
    EXPECT_THROW(parse_circuit("QUBITS 1\nCNOT 0\n"), InvalidInput);
    EXPECT_THROW(parse_circuit("QUBITS 1\nH 4\n"), InvalidInput);
}

TEST(measure, collapses_and_is_seeded) {
    const auto bell = run(Circuit(2).h(0).cnot(0, 1), StateVector(2));
    const unsigned q0[] = {0};
    const unsigned both[] = {0, 1};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Measurement m = measure(bell, q0, seed);
        EXPECT_EQ(m.collapsed.probability(m.bits ? 3 : 0), 1.0);
        EXPECT_EQ(measure(bell, q0, seed).bits, m.bits);
    }
    const auto dist = outcome_distribution(bell, both);
    EXPECT_NEAR(dist[0], 0.5, 1e-12);
    EXPECT_NEAR(dist[1], 0.0, 1e-12);
    EXPECT_NEAR(dist[3], 0.5, 1e-12);
}

TEST(swap_test, anchor_cases) {
    const StateVector zero(1);
    const StateVector one = StateVector::basis(1, 1);
    const StateVector plus = run(Circuit(1).h(0), StateVector(1));
    EXPECT_NEAR(swap_test(zero, zero).accept_probability, 1.0, 1e-9);
    EXPECT_NEAR(swap_test(zero, one).accept_probability, 0.5, 1e-9);
    EXPECT_NEAR(swap_test(zero, plus).accept_probability, 0.75, 1e-9);
}

TEST(swap_test, matches_overlap_formula) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned q = 1 + trial % 3;
        const StateVector a = random_state(q, rng);
        const StateVector b = random_state(q, rng);
        const auto r = swap_test(a, b);
        ASSERT_NEAR(r.accept_probability, (1 + std::norm(a.inner(b))) / 2, 1e-9);
        ASSERT_NEAR(r.accept_probability, r.overlap_formula, 1e-9);
    }
}

TEST(swap_test, sampled_shots) {
    const StateVector zero(1);
    const StateVector plus = run(Circuit(1).h(0), StateVector(1));
    const auto r = swap_test(zero, plus, 40000, 3);
    EXPECT_EQ(r.shots, 40000u);
    EXPECT_NEAR(static_cast<double>(r.accepted) / 40000, 0.75, 0.01);
    EXPECT_THROW(swap_test(zero, StateVector(2)), InvalidInput);
}

TEST(simon, decides_random_instances) {
    std::mt19937_64 rng(54);
    for (unsigned n : {1u, 2u, 4u, 6u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const bool simon = trial % 2 == 0;
            const FunctionTable f = simon ? random_simon(n, rng) : random_injective(n, rng);
            const SimonResult r = simon_decide(f, rng());
            ASSERT_EQ(r.decision == SimonResult::Decision::simon, simon) << "n=" << n;
            if (simon) {
                EXPECT_EQ(r.mask, f.mask);
                for (auto y : r.measurements) {
                    ASSERT_EQ(dot2(y, f.mask), 0);
                }
            }
        }
    }
}

TEST(simon, gf2_null_vector) {
    EXPECT_EQ(gf2_unique_null_vector({0b011, 0b110}, 3), 0b111u);
    EXPECT_EQ(gf2_unique_null_vector({0b001}, 3), std::nullopt);
    EXPECT_EQ(gf2_unique_null_vector({0b01, 0b10}, 2), std::nullopt);
}

TEST(simon, rounds_exhausted) {
    // A constant function is neither kind; the measured rank stays at zero.
    const FunctionTable f = FunctionTable::make(3, 3, {0, 0, 0, 0, 0, 0, 0, 0});
    EXPECT_THROW(simon_decide(f, 1, 5), RoundsExhausted);
}

TEST(simquery, deterministic_combinations) {
    for (int combo = 0; combo < 4; ++combo) {
        const bool l_accepts = combo & 1;
        const bool lc_accepts = combo & 2;
        const Circuit ql = toy_decider(1, 1, {l_accepts, l_accepts}, 0);
        const Circuit qlc = toy_decider(1, 1, {lc_accepts, lc_accepts}, 0);
        const Circuit sq = build_simquery(ql, qlc);
        const unsigned t = ql.num_qubits();
        ASSERT_EQ(sq.num_qubits(), 2 * t + 1);
        for (std::uint64_t x = 0; x < 2; ++x) {
            const std::uint64_t in = x | x << t;
            const StateVector out = run(sq, StateVector::basis(sq.num_qubits(), in));
            const bool flip = l_accepts && !lc_accepts;
            ASSERT_NEAR(out.probability(in | std::uint64_t{flip} << (2 * t)), 1.0, 1e-12) << combo;
        }
    }
}

TEST(simquery, noisy_deciders_flip_with_high_probability) {
    const Circuit ql = toy_decider(1, 7, {true, false}, 1);
    const Circuit qlc = toy_decider(1, 7, {false, true}, 1);
    const Circuit sq = build_simquery(ql, qlc);
    const unsigned t = ql.num_qubits();
    ASSERT_EQ(sq.num_qubits(), 19u);
    const StateVector out = run(sq, StateVector(sq.num_qubits()));
    EXPECT_GE(out.probability_one(2 * t), 0.98);
    EXPECT_NEAR(out.probability_one(2 * t), (127.0 / 128) * (127.0 / 128), 1e-9);
    // x = 1 is outside L: no flip except on double error.
    const std::uint64_t in = 1 | std::uint64_t{1} << t;
    const StateVector rej = run(sq, StateVector::basis(sq.num_qubits(), in));
    EXPECT_NEAR(rej.probability_one(2 * t), 1.0 / (128.0 * 128.0), 1e-9);
}

TEST(simquery, rejects_mismatched_widths) {
    EXPECT_THROW(build_simquery(toy_decider(1, 1, {true, true}, 0), toy_decider(1, 2, {true, true}, 0)),
                 InvalidInput);
    EXPECT_THROW(build_simquery(Circuit(2), Circuit(2)), InvalidInput);
}
