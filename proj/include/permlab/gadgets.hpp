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

#ifndef PERMLAB_GADGETS_HPP
#define PERMLAB_GADGETS_HPP

#include <cstddef>

#include "permlab/int_matrix.hpp"

namespace permlab {

/// The (k+2)x(k+2) sign matrix built from a kxk sign matrix X such that
///
///     Per(Z) = -Per(X),   Per(Z minus last row/col) = Per(X minus first row/col),
///
/// and whose bottom-right entry is 0.
struct GadgetZ {
    IntMatrix z;
    std::size_t source_dim = 0;
};

/// Layout (0-based, k = dim X):
///   z[i][j] = x[k-1-i][k-1-j]            for i, j < k  (X with rows and columns reversed)
///   z[k-1][k] = 1,  z[k-1][k+1] = -1
///   z[k][k-1] = 1,  z[k][k+1]   = 1
///   z[k+1][k-1] = -1, z[k+1][k] = -1
/// every other border entry is 0.
/// Throws InvalidInput if X is empty or has an entry outside {-1, 0, 1}.
GadgetZ build_z(const IntMatrix& x);

/// Overlaps Z (m x m, z[m-1][m-1] == 0) and X (n x n) on one shared cell:
/// W is (m+n-1) square, its top-left m x m block is Z except w[m-1][m-1] = x[0][0],
/// its bottom-right n x n block is X, and every other entry is 0. Then
///
///     Per(W) = Per(Z) Per(X^{1,1}) + Per(Z^{m,m}) Per(X).
///
/// Throws InvalidInput if m < 2, n < 1 or z[m-1][m-1] != 0.
IntMatrix build_w(const IntMatrix& z, const IntMatrix& x);

}  // namespace permlab

#endif  // PERMLAB_GADGETS_HPP
