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
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

void check_qubit_count(unsigned q) {
    if (q > kMaxQubits) {
        throw LimitExceeded("state vector of " + std::to_string(q) + " qubits exceeds the " +
                            std::to_string(kMaxQubits) + "-qubit limit");
    }
}

std::size_t expected_arity(Gate g) {
    switch (g) {
        case Gate::x:
        case Gate::z:
        case Gate::h:
        case Gate::t:
        case Gate::tdg:
            return 1;
        case Gate::cnot:
        case Gate::swap:
            return 2;
        case Gate::ccnot:
        case Gate::cswap:
            return 3;
        case Gate::oracle:
            return 0;
    }
    return 0;
}

}  // namespace

StateVector::StateVector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, 0.0);
    amps_[0] = 1.0;
}

StateVector StateVector::basis(unsigned num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw IndexOutOfRange("basis index " + std::to_string(index) + " out of range for " +
                              std::to_string(num_qubits) + " qubits");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t size = amplitudes.size();
    if (size == 0 || (size & (size - 1)) != 0) {
        throw InvalidInput("amplitude count must be a power of two, got " + std::to_string(size));
    }
    StateVector s;
    s.num_qubits_ = static_cast<unsigned>(std::countr_zero(size));
    check_qubit_count(s.num_qubits_);
    s.amps_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1.0) > 1e-9) {
        throw InvalidInput("state is not normalized (norm " + std::to_string(s.norm()) + ")");
    }
    return s;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.size() != size()) {
        throw InvalidInput("inner product of states with different qubit counts");
    }
    Amplitude sum = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        sum += std::conj(amps_[i]) * other.amps_[i];
    }
    return sum;
}

StateVector StateVector::tensor(const StateVector& high) const {
    check_qubit_count(num_qubits_ + high.num_qubits_);
    StateVector out;
    out.num_qubits_ = num_qubits_ + high.num_qubits_;
    out.amps_.resize(size() * high.size());
    for (std::size_t h = 0; h < high.size(); ++h) {
        for (std::size_t l = 0; l < size(); ++l) {
            out.amps_[h * size() + l] = amps_[l] * high.amps_[h];
        }
    }
    return out;
}

double StateVector::probability_one(unsigned qubit) const {
    if (qubit >= num_qubits_) {
        throw IndexOutOfRange("qubit " + std::to_string(qubit) + " out of range");
    }
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i >> qubit & 1) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

StateVector random_state(unsigned num_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    double sum = 0.0;
    for (auto& a : amps) {
        a = {gauss(rng), gauss(rng)};
        sum += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (auto& a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

const char* gate_name(Gate g) {
    switch (g) {
        case Gate::x: return "X";
        case Gate::z: return "Z";
        case Gate::h: return "H";
        case Gate::t: return "T";
        case Gate::tdg: return "TDG";
        case Gate::cnot: return "CNOT";
        case Gate::ccnot: return "CCNOT";
        case Gate::swap: return "SWAP";
        case Gate::cswap: return "CSWAP";
        case Gate::oracle: return "ORACLE";
    }
    return "?";
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) { check_qubit_count(num_qubits); }

Circuit& Circuit::push(Gate g, std::vector<unsigned> qubits) {
    std::set<unsigned> seen;
    for (unsigned q : qubits) {
        if (q >= num_qubits_) {
            throw IndexOutOfRange(std::string(gate_name(g)) + ": qubit " + std::to_string(q) +
                                  " out of range for " + std::to_string(num_qubits_) + " qubits");
        }
        if (!seen.insert(q).second) {
            throw InvalidInput(std::string(gate_name(g)) + ": qubit " + std::to_string(q) + " repeated");
        }
    }
    ops_.push_back({g, std::move(qubits)});
    return *this;
}

Circuit& Circuit::x(unsigned q) { return push(Gate::x, {q}); }
Circuit& Circuit::z(unsigned q) { return push(Gate::z, {q}); }
Circuit& Circuit::h(unsigned q) { return push(Gate::h, {q}); }
Circuit& Circuit::t(unsigned q) { return push(Gate::t, {q}); }
Circuit& Circuit::tdg(unsigned q) { return push(Gate::tdg, {q}); }
Circuit& Circuit::cnot(unsigned c, unsigned t) { return push(Gate::cnot, {c, t}); }
Circuit& Circuit::ccnot(unsigned c0, unsigned c1, unsigned t) { return push(Gate::ccnot, {c0, c1, t}); }
Circuit& Circuit::swap(unsigned a, unsigned b) { return push(Gate::swap, {a, b}); }
Circuit& Circuit::cswap(unsigned c, unsigned a, unsigned b) { return push(Gate::cswap, {c, a, b}); }

Circuit& Circuit::oracle(std::shared_ptr<const FunctionTable> f, std::span<const unsigned> input,
                         std::span<const unsigned> output) {
    if (!f) {
        throw InvalidInput("oracle: null function table");
    }
    if (input.size() != f->in_bits || output.size() != f->out_bits) {
        throw InvalidInput("oracle: registers of width " + std::to_string(input.size()) + "/" +
                           std::to_string(output.size()) + " do not match table arity " +
                           std::to_string(f->in_bits) + "/" + std::to_string(f->out_bits));
    }
    std::vector<unsigned> qubits(input.begin(), input.end());
    qubits.insert(qubits.end(), output.begin(), output.end());
    push(Gate::oracle, std::move(qubits));
    ops_.back().in_width = f->in_bits;
    ops_.back().table = tables_.size();
    tables_.push_back(std::move(f));
    return *this;
}

Circuit& Circuit::append(const Circuit& other, unsigned offset) {
    if (other.num_qubits_ + offset > num_qubits_) {
        throw InvalidInput("append: circuit on " + std::to_string(other.num_qubits_) +
                           " qubits does not fit at offset " + std::to_string(offset));
    }
    for (const Op& op : other.ops_) {
        Op copy = op;
        for (auto& q : copy.qubits) {
            q += offset;
        }
        if (op.gate == Gate::oracle) {
            copy.table = tables_.size();
            tables_.push_back(other.tables_.at(op.table));
        }
        ops_.push_back(std::move(copy));
    }
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(num_qubits_);
    out.output_qubit = output_qubit;
    out.tables_ = tables_;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        Op op = *it;
        if (op.gate == Gate::t) {
            op.gate = Gate::tdg;
        } else if (op.gate == Gate::tdg) {
            op.gate = Gate::t;
        }
        out.ops_.push_back(std::move(op));
    }
    return out;
}

std::string Circuit::str() const {
    std::ostringstream out;
    out << "QUBITS " << num_qubits_ << '\n';
    for (const Op& op : ops_) {
        out << gate_name(op.gate);
        if (op.gate == Gate::oracle) {
            out << ' ' << op.table << ' ' << op.in_width;
        }
        for (unsigned q : op.qubits) {
            out << ' ' << q;
        }
        out << '\n';
    }
    return out.str();
}

Circuit parse_circuit(const std::string& text) {
    static const std::unordered_map<std::string, Gate> kGates = {
        {"X", Gate::x},         {"Z", Gate::z},     {"H", Gate::h},       {"T", Gate::t},
        {"TDG", Gate::tdg},     {"CNOT", Gate::cnot}, {"CCNOT", Gate::ccnot}, {"SWAP", Gate::swap},
        {"CSWAP", Gate::cswap},
    };
    std::istringstream in(text);
    std::string line;
    std::optional<unsigned> declared;
    std::vector<std::pair<Gate, std::vector<unsigned>>> parsed;
    unsigned needed = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        for (auto& c : name) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        const std::string where = "circuit line " + std::to_string(line_no) + ": ";
        std::vector<unsigned> qubits;
        long long v;
        while (fields >> v) {
            if (v < 0 || v >= static_cast<long long>(kMaxQubits)) {
                throw IndexOutOfRange(where + "qubit index " + std::to_string(v) + " out of range");
            }
            qubits.push_back(static_cast<unsigned>(v));
        }
        if (!fields.eof()) {
            throw InvalidInput(where + "expected integer qubit indices");
        }
        if (name == "QUBITS") {
            if (qubits.size() != 1 || declared || !parsed.empty()) {
                throw InvalidInput(where + "QUBITS must be the first line and take one count");
            }
            declared = qubits[0];
            continue;
        }
        auto it = kGates.find(name);
        if (it == kGates.end()) {
            throw InvalidInput(where + "unknown gate '" + name + "'");
        }
        if (qubits.size() != expected_arity(it->second)) {
            throw InvalidInput(where + name + " takes " + std::to_string(expected_arity(it->second)) + " qubits");
        }
        for (unsigned q : qubits) {
            needed = std::max(needed, q + 1);
        }
        parsed.emplace_back(it->second, std::move(qubits));
    }
    const unsigned count = declared.value_or(needed);
    if (needed > count) {
        throw IndexOutOfRange("circuit uses qubit " + std::to_string(needed - 1) + " but declares " +
                              std::to_string(count) + " qubits");
    }
    Circuit c(count);
    for (auto& [gate, qubits] : parsed) {
        switch (gate) {
            case Gate::x: c.x(qubits[0]); break;
            case Gate::z: c.z(qubits[0]); break;
            case Gate::h: c.h(qubits[0]); break;
            case Gate::t: c.t(qubits[0]); break;
            case Gate::tdg: c.tdg(qubits[0]); break;
            case Gate::cnot: c.cnot(qubits[0], qubits[1]); break;
            case Gate::ccnot: c.ccnot(qubits[0], qubits[1], qubits[2]); break;
            case Gate::swap: c.swap(qubits[0], qubits[1]); break;
            case Gate::cswap: c.cswap(qubits[0], qubits[1], qubits[2]); break;
            case Gate::oracle: break;
        }
    }
    return c;
}

void apply(StateVector& state, const Circuit& circuit, const Op& op) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw InvalidInput("state has " + std::to_string(state.num_qubits()) + " qubits, circuit has " +
                           std::to_string(circuit.num_qubits()));
    }
    auto& a = state.mutable_amplitudes();
    const std::size_t size = a.size();
    auto bit = [&](std::size_t k) { return std::size_t{1} << op.qubits[k]; };

    switch (op.gate) {
        case Gate::x: {
            const std::size_t t = bit(0);
            for (std::size_t i = 0; i < size; ++i) {
                if (!(i & t)) {
                    std::swap(a[i], a[i | t]);
                }
            }
            break;
        }
        case Gate::z: {
            const std::size_t t = bit(0);
            for (std::size_t i = 0; i < size; ++i) {
                if (i & t) {
                    a[i] = -a[i];
                }
            }
            break;
        }
        case Gate::h: {
            const std::size_t t = bit(0);
            const double r = std::numbers::sqrt2 / 2.0;
            for (std::size_t i = 0; i < size; ++i) {
                if (!(i & t)) {
                    const Amplitude lo = a[i];
                    const Amplitude hi = a[i | t];
                    a[i] = r * (lo + hi);
                    a[i | t] = r * (lo - hi);
                }
            }
            break;
        }
        case Gate::t:
        case Gate::tdg: {
            const std::size_t t = bit(0);
            const double r = std::numbers::sqrt2 / 2.0;
            const Amplitude phase{r, op.gate == Gate::t ? r : -r};
            for (std::size_t i = 0; i < size; ++i) {
                if (i & t) {
                    a[i] *= phase;
                }
            }
            break;
        }
        case Gate::cnot: {
            const std::size_t c = bit(0), t = bit(1);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & c) && !(i & t)) {
                    std::swap(a[i], a[i | t]);
                }
            }
            break;
        }
        case Gate::ccnot: {
            const std::size_t c0 = bit(0), c1 = bit(1), t = bit(2);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & c0) && (i & c1) && !(i & t)) {
                    std::swap(a[i], a[i | t]);
                }
            }
            break;
        }
        case Gate::swap: {
            const std::size_t p = bit(0), q = bit(1);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & p) && !(i & q)) {
                    std::swap(a[i], a[i ^ p ^ q]);
                }
            }
            break;
        }
        case Gate::cswap: {
            const std::size_t c = bit(0), p = bit(1), q = bit(2);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & c) && (i & p) && !(i & q)) {
                    std::swap(a[i], a[i ^ p ^ q]);
                }
            }
            break;
        }
        case Gate::oracle: {
            const FunctionTable& f = circuit.table(op.table);
            std::vector<Amplitude> out(size);
            for (std::size_t i = 0; i < size; ++i) {
                std::uint64_t x = 0;
                for (unsigned k = 0; k < op.in_width; ++k) {
                    x |= static_cast<std::uint64_t>(i >> op.qubits[k] & 1) << k;
                }
                const std::uint64_t fx = f(x);
                std::size_t j = i;
                for (unsigned k = 0; k < f.out_bits; ++k) {
                    if (fx >> k & 1) {
                        j ^= std::size_t{1} << op.qubits[op.in_width + k];
                    }
                }
                out[j] = a[i];
            }
            a = std::move(out);
            break;
        }
    }
}

StateVector run(const Circuit& circuit, StateVector initial) {
    for (const Op& op : circuit.ops()) {
        apply(initial, circuit, op);
    }
    return initial;
}

std::vector<double> outcome_distribution(const StateVector& state, std::span<const unsigned> qubits) {
    if (qubits.size() > 20) {
        throw LimitExceeded("outcome_distribution: too many measured qubits");
    }
    for (unsigned q : qubits) {
        if (q >= state.num_qubits()) {
            throw IndexOutOfRange("measured qubit " + std::to_string(q) + " out of range");
        }
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    const auto& a = state.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t key = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            key |= (i >> qubits[k] & 1) << k;
        }
        probs[key] += std::norm(a[i]);
    }
    return probs;
}

Measurement measure(const StateVector& state, std::span<const unsigned> qubits, std::mt19937_64& rng) {
    const std::vector<double> probs = outcome_distribution(state, qubits);
    double total = 0.0;
    for (double p : probs) {
        total += p;
    }
    std::uniform_real_distribution<double> uni(0.0, total);
    const double u = uni(rng);
    std::uint64_t outcome = probs.size() - 1;
    double run_sum = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        run_sum += probs[k];
        if (u < run_sum) {
            outcome = k;
            break;
        }
    }
    while (probs[outcome] == 0.0 && outcome > 0) {
        --outcome;
    }

    std::vector<Amplitude> amps = state.amplitudes();
    const double scale = 1.0 / std::sqrt(probs[outcome]);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            key |= static_cast<std::uint64_t>(i >> qubits[k] & 1) << k;
        }
        amps[i] = key == outcome ? amps[i] * scale : Amplitude{0.0};
    }
    return {outcome, StateVector::from_amplitudes(std::move(amps))};
}

Measurement measure(const StateVector& state, std::span<const unsigned> qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure(state, qubits, rng);
}

}  // namespace permlab
