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

#ifndef PERMLAB_PERMANENT_HPP
#define PERMLAB_PERMANENT_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "permlab/int_matrix.hpp"

namespace permlab {

using ComplexMatrix = Eigen::MatrixXcd;

/// Sum over all n! permutations of the product of selected entries. O(n * n!).
/// Used as the reference every faster engine is checked against.
BigInt permanent_naive(const IntMatrix& m);

/// Which arithmetic backs the Ryser evaluation.
enum class RyserArithmetic {
    /// Exact fixed-width products (128 to 512 bits) when the row-sum bound
    /// allows it, else multi-modular.
    automatic,
    /// Force residue arithmetic modulo word-sized primes with CRT reconstruction.
    modular,
};

struct RyserOptions {
    /// Worker threads for the subset loop; 0 means `worker_count()`.
    unsigned threads = 1;
    RyserArithmetic arithmetic = RyserArithmetic::automatic;
};

/// Ryser's inclusion-exclusion formula with Gray-code subset order:
///
///     Per(M) = (-1)^n sum_{S subset [n]} (-1)^{|S|} prod_i sum_{j in S} m_ij
///
/// One column is added or removed per step, so each step costs O(n).
/// The result is exact for any integer entries.
BigInt permanent_ryser(const IntMatrix& m, const RyserOptions& options = {});

/// Ryser over complex doubles. Throws InvalidInput if `m` is not square.
std::complex<double> permanent_complex(const ComplexMatrix& m);

/// Product over rows of the row's absolute sum; an upper bound on |Per(m)|.
BigInt permanent_bound(const IntMatrix& m);

}  // namespace permlab

#endif  // PERMLAB_PERMANENT_HPP
