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

#include "permlab/function_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

void check_bits(unsigned bits, const char* what) {
    if (bits < 1 || bits > kMaxTableBits) {
        throw InvalidInput(std::string("function table: ") + what + " width must be in [1, " +
                           std::to_string(kMaxTableBits) + "], got " + std::to_string(bits));
    }
}

}  // namespace

FunctionTable FunctionTable::make(unsigned in_bits, unsigned out_bits, std::vector<std::uint64_t> outputs) {
    check_bits(in_bits, "input");
    check_bits(out_bits, "output");
    if (outputs.size() != (std::size_t{1} << in_bits)) {
        throw InvalidInput("function table: expected " + std::to_string(std::size_t{1} << in_bits) +
                           " outputs, got " + std::to_string(outputs.size()));
    }
    for (std::uint64_t v : outputs) {
        if (v >> out_bits) {
            throw InvalidInput("function table: output " + std::to_string(v) + " does not fit in " +
                               std::to_string(out_bits) + " bits");
        }
    }
    return {in_bits, out_bits, std::move(outputs), Kind::unconstrained, 0};
}

FunctionTable FunctionTable::injective(unsigned n, std::vector<std::uint64_t> outputs) {
    FunctionTable f = make(n, n, std::move(outputs));
    f.kind = Kind::injective;
    validate(f);
    return f;
}

FunctionTable FunctionTable::simon(unsigned n, std::uint64_t mask, std::vector<std::uint64_t> outputs) {
    FunctionTable f = make(n, n, std::move(outputs));
    f.kind = Kind::simon;
    f.mask = mask;
    validate(f);
    return f;
}

void validate(const FunctionTable& f) {
    const std::size_t size = std::size_t{1} << f.in_bits;
    if (f.outputs.size() != size) {
        throw InvalidInput("function table has the wrong number of outputs");
    }
    std::unordered_set<std::uint64_t> distinct(f.outputs.begin(), f.outputs.end());
    switch (f.kind) {
        case FunctionTable::Kind::injective:
            if (distinct.size() != size) {
                throw InvalidInput("injective table has repeated outputs");
            }
            break;
        case FunctionTable::Kind::simon:
            if (f.mask == 0 || f.mask >= size) {
                throw InvalidInput("simon table needs a nonzero mask below 2^n");
            }
            for (std::uint64_t x = 0; x < size; ++x) {
                if (f.outputs[x] != f.outputs[x ^ f.mask]) {
                    throw InvalidInput("simon table violates f(x) = f(x ^ s) at x = " + std::to_string(x));
                }
            }
            if (distinct.size() != size / 2) {
                throw InvalidInput("simon table must take exactly 2^{n-1} distinct values");
            }
            break;
        case FunctionTable::Kind::unconstrained:
            break;
    }
}

FunctionTable random_injective(unsigned n, std::mt19937_64& rng) {
    check_bits(n, "input");
    std::vector<std::uint64_t> out(std::size_t{1} << n);
    std::iota(out.begin(), out.end(), 0);
    std::shuffle(out.begin(), out.end(), rng);
    return FunctionTable::injective(n, std::move(out));
}

FunctionTable random_simon(unsigned n, std::uint64_t mask, std::mt19937_64& rng) {
    check_bits(n, "input");
    const std::size_t size = std::size_t{1} << n;
    if (mask == 0 || mask >= size) {
        throw InvalidInput("random_simon: mask must be nonzero and below 2^n");
    }
    std::vector<std::uint64_t> values(size);
    std::iota(values.begin(), values.end(), 0);
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<std::uint64_t> out(size);
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        // Assign on the smaller representative of each pair.
        if (x < (x ^ mask)) {
            out[x] = out[x ^ mask] = values[next++];
        }
    }
    return FunctionTable::simon(n, mask, std::move(out));
}

FunctionTable random_simon(unsigned n, std::mt19937_64& rng) {
    check_bits(n, "input");
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    return random_simon(n, pick(rng), rng);
}

int dot2(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

}  // namespace permlab
