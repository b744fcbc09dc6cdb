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

#ifndef PERMLAB_TESTS_TEST_UTIL_HPP
#define PERMLAB_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "permlab/int_matrix.hpp"

namespace permlab::testing {

inline IntMatrix random_matrix(std::size_t n, long long lo, long long hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pick(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = pick(rng);
        }
    }
    return m;
}

inline IntMatrix random_sign_matrix(std::size_t n, std::mt19937_64& rng) { return random_matrix(n, -1, 1, rng); }

/// All 3^{k*k} sign matrices, in base-3 counting order.
template <typename F>
void for_each_sign_matrix(std::size_t k, F&& f) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k * k; ++i) {
        total *= 3;
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        IntMatrix x(k);
        std::uint64_t v = idx;
        for (std::size_t p = 0; p < k * k; ++p) {
            x(p / k, p % k) = static_cast<long long>(v % 3) - 1;
            v /= 3;
        }
        f(x);
    }
}

}  // namespace permlab::testing

#endif  // PERMLAB_TESTS_TEST_UTIL_HPP
