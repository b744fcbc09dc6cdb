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

#ifndef PERMLAB_ADVICE_HPP
#define PERMLAB_ADVICE_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "permlab/int_matrix.hpp"

namespace permlab {

/// One gadget matrix with its cached permanent data:
/// alpha = Per(Z minus last row/col) != 0 and ratio = Per(Z) / alpha.
struct AdviceEntry {
    IntMatrix z;
    BigInt alpha;
    Rational ratio;

    bool operator==(const AdviceEntry&) const = default;
};

/// Gadgets for k x k inputs, sorted strictly ascending by ratio.
struct AdviceTable {
    std::size_t size_k = 0;
    std::vector<AdviceEntry> entries;

    bool operator==(const AdviceTable&) const = default;
};

/// Advice tables keyed by input dimension.
using AdviceSet = std::map<std::size_t, AdviceTable>;

/// Enumerates every X in {-1,0,1}^{k x k}, builds Z = build_z(X), drops
/// gadgets with alpha == 0, keeps the first witness (lowest enumeration index)
/// of each ratio and sorts by ratio. `threads` = 0 means worker_count().
/// The output does not depend on the thread count.
AdviceTable generate_advice(std::size_t k, unsigned threads = 0);

/// Checks sortedness, distinct ratios, z[last][last] == 0 and that alpha and
/// ratio match the permanents of Z. Throws VerificationFailure.
void validate_advice(const AdviceTable& table);

/// Text format: header `k <dim> count <N>`, then per entry one line with the
/// (k+2)^2 entries of Z row-major, alpha, and the ratio as `p/q`.
void write_advice(std::ostream& out, const AdviceTable& table);
AdviceTable read_advice(std::istream& in);

/// Default cache location: `$PERMLAB_ADVICE_DIR`, else `.permlab-cache` under
/// the current directory.
std::filesystem::path default_advice_dir();

/// Reads `<dir>/advice_k<k>.txt` if present and valid, otherwise generates the
/// table and writes it there.
AdviceTable load_or_generate_advice(std::size_t k, const std::filesystem::path& dir,
                                    unsigned threads = 0);

/// Tables for dimensions 1..max_k.
AdviceSet load_advice_set(std::size_t max_k, const std::filesystem::path& dir, unsigned threads = 0);

}  // namespace permlab

#endif  // PERMLAB_ADVICE_HPP
