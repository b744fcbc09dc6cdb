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

#include "permlab/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace permlab {

Circuit swap_test_circuit(unsigned q) {
    Circuit c(2 * q + 1);
    c.h(0);
    for (unsigned i = 0; i < q; ++i) {
        c.cswap(0, 1 + i, 1 + q + i);
    }
    c.h(0);
    return c;
}

SwapTestResult swap_test(const StateVector& psi, const StateVector& phi, std::uint64_t shots, std::uint64_t seed) {
    if (psi.num_qubits() != phi.num_qubits()) {
        throw InvalidInput("swap_test: states have " + std::to_string(psi.num_qubits()) + " and " +
                           std::to_string(phi.num_qubits()) + " qubits");
    }
    const unsigned q = psi.num_qubits();
    if (2 * q + 1 > kMaxQubits) {
        throw LimitExceeded("swap_test: 2q+1 = " + std::to_string(2 * q + 1) + " qubits exceeds the limit");
    }
    const StateVector initial = StateVector(1).tensor(psi).tensor(phi);
    const StateVector out = run(swap_test_circuit(q), initial);

    SwapTestResult result;
    result.accept_probability = 1.0 - out.probability_one(0);
    result.overlap_formula = (1.0 + std::norm(psi.inner(phi))) / 2.0;
    result.shots = shots;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution accept(std::clamp(result.accept_probability, 0.0, 1.0));
    for (std::uint64_t s = 0; s < shots; ++s) {
        result.accepted += accept(rng) ? 1 : 0;
    }
    return result;
}

Circuit simon_round_circuit(const FunctionTable& f) {
    const unsigned n = f.in_bits;
    Circuit c(2 * n);
    std::vector<unsigned> x(n), y(n);
    std::iota(x.begin(), x.end(), 0u);
    std::iota(y.begin(), y.end(), n);
    for (unsigned q : x) {
        c.h(q);
    }
    c.oracle(std::make_shared<FunctionTable>(f), x, y);
    for (unsigned q : x) {
        c.h(q);
    }
    return c;
}

std::optional<std::uint64_t> gf2_unique_null_vector(const std::vector<std::uint64_t>& rows, unsigned n) {
    // Reduced row echelon form; pivot[c] = row index with leading column c.
    std::vector<std::uint64_t> basis;
    std::vector<int> pivot_of_row;
    for (std::uint64_t r : rows) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (r >> pivot_of_row[i] & 1) {
                r ^= basis[i];
            }
        }
        if (r == 0) {
            continue;
        }
        const int p = std::countr_zero(r);
        for (auto& b : basis) {
            if (b >> p & 1) {
                b ^= r;
            }
        }
        basis.push_back(r);
        pivot_of_row.push_back(p);
    }
    if (basis.size() + 1 != n) {
        return std::nullopt;
    }
    std::uint64_t pivots = 0;
    for (int p : pivot_of_row) {
        pivots |= std::uint64_t{1} << p;
    }
    int free_col = -1;
    for (unsigned c = 0; c < n; ++c) {
        if (!(pivots >> c & 1)) {
            free_col = static_cast<int>(c);
            break;
        }
    }
    // Free variable = 1; each pivot variable equals the row's free-column bit.
    std::uint64_t s = std::uint64_t{1} << free_col;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] >> free_col & 1) {
            s |= std::uint64_t{1} << pivot_of_row[i];
        }
    }
    return s;
}

SimonResult simon_decide(const FunctionTable& f, std::uint64_t seed, unsigned max_rounds) {
    const unsigned n = f.in_bits;
    if (f.out_bits != n) {
        throw InvalidInput("simon_decide: table must map n bits to n bits");
    }
    if (2 * n > kMaxQubits) {
        throw LimitExceeded("simon_decide: 2n = " + std::to_string(2 * n) + " qubits exceeds the limit");
    }
    if (max_rounds == 0) {
        max_rounds = 10 * n;
    }
    const Circuit round = simon_round_circuit(f);
    std::vector<unsigned> first(n);
    std::iota(first.begin(), first.end(), 0u);

    SimonResult result;
    // n = 1: the only nonzero mask is 1 and needs no equations.
    if (n == 1) {
        const bool periodic = f(0) == f(1);
        result.decision = periodic ? SimonResult::Decision::simon : SimonResult::Decision::injective;
        result.mask = periodic ? 1 : 0;
        return result;
    }

    std::mt19937_64 rng(seed);
    // Rows kept reduced against each other's lowest set bit.
    std::vector<std::uint64_t> basis;
    while (result.rounds < max_rounds) {
        ++result.rounds;
        const StateVector state = run(round, StateVector(2 * n));
        const std::uint64_t y = measure(state, first, rng).bits;
        result.measurements.push_back(y);

        std::uint64_t r = y;
        for (std::uint64_t b : basis) {
            if (r & (b & (~b + 1))) {
                r ^= b;
            }
        }
        if (r == 0) {
            continue;
        }
        const std::uint64_t low = r & (~r + 1);
        for (auto& b : basis) {
            if (b & low) {
                b ^= r;
            }
        }
        basis.push_back(r);

        if (basis.size() == n) {
            result.decision = SimonResult::Decision::injective;
            return result;
        }
        if (basis.size() == n - 1) {
            const auto s = gf2_unique_null_vector(basis, n);
            if (s && f(0) == f(*s)) {
                result.decision = SimonResult::Decision::simon;
                result.mask = *s;
            } else {
                result.decision = SimonResult::Decision::injective;
            }
            return result;
        }
    }
    throw RoundsExhausted("simon_decide: " + std::to_string(max_rounds) + " rounds gave only " +
                          std::to_string(basis.size()) + " of " + std::to_string(n - 1) +
                          " independent equations");
}

Circuit build_simquery(const Circuit& q_l, const Circuit& q_lc) {
    if (q_l.num_qubits() != q_lc.num_qubits()) {
        throw InvalidInput("build_simquery: circuits act on " + std::to_string(q_l.num_qubits()) + " and " +
                           std::to_string(q_lc.num_qubits()) + " qubits");
    }
    if (!q_l.output_qubit || !q_lc.output_qubit) {
        throw InvalidInput("build_simquery: both circuits must designate an output qubit");
    }
    const unsigned t = q_l.num_qubits();
    const unsigned out_l = *q_l.output_qubit;
    const unsigned out_lc = t + *q_lc.output_qubit;
    Circuit c(2 * t + 1);
    c.append(q_l, 0);
    c.append(q_lc, t);
    c.x(out_lc);
    c.ccnot(out_l, out_lc, 2 * t);
    c.x(out_lc);
    c.append(q_l.inverse(), 0);
    c.append(q_lc.inverse(), t);
    c.output_qubit = 2 * t;
    return c;
}

Circuit toy_decider(unsigned input_bits, unsigned coin_bits, const std::vector<bool>& accept, unsigned wrong_coins) {
    if (accept.size() != (std::size_t{1} << input_bits)) {
        throw InvalidInput("toy_decider: need one answer per input");
    }
    if (wrong_coins > (1u << coin_bits)) {
        throw InvalidInput("toy_decider: more wrong coins than coin values");
    }
    const unsigned in = input_bits + coin_bits;
    Circuit c(in + 1);
    std::vector<std::uint64_t> table(std::size_t{1} << in);
    for (std::uint64_t key = 0; key < table.size(); ++key) {
        const std::uint64_t x = key & ((std::uint64_t{1} << input_bits) - 1);
        const std::uint64_t coin = key >> input_bits;
        const bool flipped = coin < wrong_coins;
        table[key] = (accept[x] != flipped) ? 1 : 0;
    }
    std::vector<unsigned> reg(in);
    std::iota(reg.begin(), reg.end(), 0u);
    const unsigned out[] = {in};
    for (unsigned q = input_bits; q < in; ++q) {
        c.h(q);
    }
    c.oracle(std::make_shared<FunctionTable>(FunctionTable::make(in, 1, std::move(table))), reg, out);
    c.output_qubit = in;
    return c;
}

}  // namespace permlab
