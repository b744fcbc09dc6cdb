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

#ifndef PERMLAB_FUNCTION_TABLE_HPP
#define PERMLAB_FUNCTION_TABLE_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace permlab {

inline constexpr unsigned kMaxTableBits = 12;

/// Explicit truth table f: {0,1}^in -> {0,1}^out, indexed by the input as an
/// integer. Simon-style tables use in == out == n.
struct FunctionTable {
    enum class Kind { injective, simon, unconstrained };

    unsigned in_bits = 0;
    unsigned out_bits = 0;
    std::vector<std::uint64_t> outputs;
    Kind kind = Kind::unconstrained;
    /// Hidden XOR mask; meaningful only for Kind::simon.
    std::uint64_t mask = 0;

    std::uint64_t operator()(std::uint64_t x) const { return outputs.at(x); }

    /// Builds an unconstrained table and checks sizes. Throws InvalidInput.
    static FunctionTable make(unsigned in_bits, unsigned out_bits, std::vector<std::uint64_t> outputs);
    /// Tags `outputs` as injective; throws InvalidInput unless all values are distinct.
    static FunctionTable injective(unsigned n, std::vector<std::uint64_t> outputs);
    /// Tags `outputs` as a Simon function with `mask`; throws InvalidInput unless
    /// f(x) == f(x ^ mask) for all x and f takes exactly 2^{n-1} values.
    static FunctionTable simon(unsigned n, std::uint64_t mask, std::vector<std::uint64_t> outputs);
};

/// Throws InvalidInput if `f` does not satisfy the invariant of its kind.
void validate(const FunctionTable& f);

/// Uniformly random bijection on {0,1}^n.
FunctionTable random_injective(unsigned n, std::mt19937_64& rng);

/// Random Simon function with the given nonzero mask: each pair {x, x^mask}
/// receives a distinct value drawn without replacement from {0,1}^n.
FunctionTable random_simon(unsigned n, std::uint64_t mask, std::mt19937_64& rng);

/// Same with a uniformly random nonzero mask.
FunctionTable random_simon(unsigned n, std::mt19937_64& rng);

/// Parity of the bitwise AND: the GF(2) inner product.
int dot2(std::uint64_t a, std::uint64_t b);

}  // namespace permlab

#endif  // PERMLAB_FUNCTION_TABLE_HPP
