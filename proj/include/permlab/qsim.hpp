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

#ifndef PERMLAB_QSIM_HPP
#define PERMLAB_QSIM_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "permlab/function_table.hpp"

namespace permlab {

using Amplitude = std::complex<double>;

inline constexpr unsigned kMaxQubits = 20;

/// Dense 2^q amplitude vector. Qubit i is bit i of the basis index.
class StateVector {
   public:
    /// |0...0> on `num_qubits` qubits. Throws LimitExceeded above kMaxQubits.
    explicit StateVector(unsigned num_qubits);

    static StateVector basis(unsigned num_qubits, std::uint64_t index);
    /// Throws InvalidInput unless the size is a power of two and the norm is 1 within 1e-9.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return amps_.size(); }
    const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
    std::vector<Amplitude>& mutable_amplitudes() noexcept { return amps_; }

    double norm() const;
    /// <this|other>.
    Amplitude inner(const StateVector& other) const;
    /// this on the low qubits, `high` on the qubits above them.
    StateVector tensor(const StateVector& high) const;
    double probability(std::uint64_t index) const { return std::norm(amps_.at(index)); }
    /// Probability that `qubit` reads 1.
    double probability_one(unsigned qubit) const;

   private:
    StateVector() = default;

    unsigned num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Haar-random pure state.
StateVector random_state(unsigned num_qubits, std::mt19937_64& rng);

enum class Gate { x, z, h, t, tdg, cnot, ccnot, swap, cswap, oracle };

/// Text mnemonic (`X`, `CNOT`, `CSWAP`, ...).
const char* gate_name(Gate g);

struct Op {
    Gate gate;
    /// Controls first, then targets. For oracles: input register then output register.
    std::vector<unsigned> qubits;
    /// Oracle only: index into Circuit::tables() and input register width.
    std::size_t table = 0;
    unsigned in_width = 0;
};

class Circuit {
   public:
    explicit Circuit(unsigned num_qubits);

    unsigned num_qubits() const noexcept { return num_qubits_; }
    const std::vector<Op>& ops() const noexcept { return ops_; }
    const FunctionTable& table(std::size_t i) const { return *tables_.at(i); }

    /// The qubit holding the accept bit, for circuits used as deciders.
    std::optional<unsigned> output_qubit;

    Circuit& x(unsigned q);
    Circuit& z(unsigned q);
    Circuit& h(unsigned q);
    Circuit& t(unsigned q);
    Circuit& tdg(unsigned q);
    Circuit& cnot(unsigned control, unsigned target);
    Circuit& ccnot(unsigned c0, unsigned c1, unsigned target);
    Circuit& swap(unsigned a, unsigned b);
    Circuit& cswap(unsigned control, unsigned a, unsigned b);
    /// U_f |x>|y> = |x>|y ^ f(x)>. Throws InvalidInput on a width mismatch.
    Circuit& oracle(std::shared_ptr<const FunctionTable> f, std::span<const unsigned> input,
                    std::span<const unsigned> output);
    /// Appends `other` with every qubit index shifted by `offset`.
    Circuit& append(const Circuit& other, unsigned offset = 0);

    /// Reversed op list with T and T-dagger exchanged; every other gate is self-inverse.
    Circuit inverse() const;

    /// One op per line (`H 0`, `CNOT 0 1`, ...). Oracle ops print as
    /// `ORACLE <table> <in_width> q...` and cannot be parsed back.
    std::string str() const;

   private:
    Circuit& push(Gate g, std::vector<unsigned> qubits);

    unsigned num_qubits_;
    std::vector<Op> ops_;
    std::vector<std::shared_ptr<const FunctionTable>> tables_;
};

/// Parses the text format: optional `QUBITS n` header, then one `GATE q...`
/// per line; `#` starts a comment. Without a header the qubit count is the
/// largest index plus one. Throws InvalidInput.
Circuit parse_circuit(const std::string& text);

void apply(StateVector& state, const Circuit& circuit, const Op& op);
StateVector run(const Circuit& circuit, StateVector initial);

struct Measurement {
    /// Bit i holds the outcome of qubits[i].
    std::uint64_t bits = 0;
    StateVector collapsed;
};

/// Samples the listed qubits by the squared-amplitude rule and returns the
/// renormalized post-measurement state.
Measurement measure(const StateVector& state, std::span<const unsigned> qubits, std::mt19937_64& rng);
Measurement measure(const StateVector& state, std::span<const unsigned> qubits, std::uint64_t seed);

/// Probability of each outcome pattern of `qubits` (index bit i = qubits[i]).
std::vector<double> outcome_distribution(const StateVector& state, std::span<const unsigned> qubits);

}  // namespace permlab

#endif  // PERMLAB_QSIM_HPP
