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

#include "permlab/gadgets.hpp"

#include <string>

#include "permlab/errors.hpp"

namespace permlab {

GadgetZ build_z(const IntMatrix& x) {
    const std::size_t k = x.dim();
    if (k == 0) {
        throw InvalidInput("build_z: X must have dimension at least 1");
    }
    if (!x.is_sign_matrix()) {
        throw InvalidInput("build_z: X has an entry outside {-1, 0, 1}");
    }
    IntMatrix z(k + 2);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            z(i, j) = x(k - 1 - i, k - 1 - j);
        }
    }
    z(k - 1, k) = 1;
    z(k - 1, k + 1) = -1;
    z(k, k - 1) = 1;
    z(k, k + 1) = 1;
    z(k + 1, k - 1) = -1;
    z(k + 1, k) = -1;
    return {std::move(z), k};
}

IntMatrix build_w(const IntMatrix& z, const IntMatrix& x) {
    const std::size_t m = z.dim();
    const std::size_t n = x.dim();
    if (m < 2) {
        throw InvalidInput("build_w: Z must have dimension at least 2, got " + std::to_string(m));
    }
    if (n < 1) {
        throw InvalidInput("build_w: X must have dimension at least 1");
    }
    if (z(m - 1, m - 1) != 0) {
        throw InvalidInput("build_w: bottom-right entry of Z must be 0");
    }
    IntMatrix w(m + n - 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            w(i, j) = z(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            w(m - 1 + i, m - 1 + j) = x(i, j);
        }
    }
    return w;
}

}  // namespace permlab
