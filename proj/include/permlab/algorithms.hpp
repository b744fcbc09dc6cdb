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

#ifndef PERMLAB_ALGORITHMS_HPP
#define PERMLAB_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/function_table.hpp"
#include "permlab/qsim.hpp"

namespace permlab {

// ---- SWAP test ---------------------------------------------------------

struct SwapTestResult {
    /// Probability of reading 0 on the ancilla, from the simulated circuit.
    double accept_probability = 0.0;
    /// (1 + |<psi|phi>|^2) / 2 evaluated directly.
    double overlap_formula = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t accepted = 0;
};

/// Ancilla on qubit 0, psi on 1..q, phi on q+1..2q; H, controlled-SWAPs, H,
/// then `shots` seeded measurements of the ancilla.
/// Throws InvalidInput if the qubit counts differ.
SwapTestResult swap_test(const StateVector& psi, const StateVector& phi, std::uint64_t shots = 0,
                         std::uint64_t seed = 0);

/// The test circuit itself, on 2q + 1 qubits.
Circuit swap_test_circuit(unsigned q);

// ---- Simon's algorithm -------------------------------------------------

/// Raised when the round budget runs out before n-1 independent equations.
class RoundsExhausted : public VerificationFailure {
   public:
    using VerificationFailure::VerificationFailure;
};

struct SimonResult {
    enum class Decision { injective, simon };
    Decision decision = Decision::injective;
    /// The verified mask when decision == simon.
    std::uint64_t mask = 0;
    /// Every measured first-register value, in order.
    std::vector<std::uint64_t> measurements;
    unsigned rounds = 0;
};

/// Repeats H^n, U_f, H^n, measure on 2n qubits, collecting equations
/// y . s = 0 over GF(2). With n - 1 independent equations the unique nonzero
/// solution s is checked with f(0) == f(s). `max_rounds` = 0 means 10n.
/// Throws RoundsExhausted, InvalidInput if in_bits != out_bits or 2n > kMaxQubits.
SimonResult simon_decide(const FunctionTable& f, std::uint64_t seed, unsigned max_rounds = 0);

/// One round's circuit.
Circuit simon_round_circuit(const FunctionTable& f);

/// Nonzero s with y . s = 0 for all rows of a rank n-1 system, if unique.
std::optional<std::uint64_t> gf2_unique_null_vector(const std::vector<std::uint64_t>& rows, unsigned n);

// ---- SimQuery ----------------------------------------------------------

/// Runs `q_l` on qubits [0, t) and `q_lc` on [t, 2t), flips q_lc's output, sets
/// qubit 2t ^= out_l AND out_lc, restores q_lc's output, then uncomputes both
/// circuits. Throws InvalidInput if the widths differ or an output qubit is unset.
Circuit build_simquery(const Circuit& q_l, const Circuit& q_lc);

/// Toy decider on `input_bits + coin_bits + 1` qubits: Hadamards on the coin
/// register, then a table lookup writing accept(x, coin) into the output
/// qubit (the last one). Input bits are the low qubits.
/// `accept[x]` is the intended answer; it is inverted for `wrong_coins` of
/// the 2^coin_bits coin values, giving error wrong_coins / 2^coin_bits.
Circuit toy_decider(unsigned input_bits, unsigned coin_bits, const std::vector<bool>& accept,
                    unsigned wrong_coins);

}  // namespace permlab

#endif  // PERMLAB_ALGORITHMS_HPP
