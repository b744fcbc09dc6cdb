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

#include "permlab/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "permlab/errors.hpp"
#include "test_util.hpp"

using namespace permlab;
using permlab::testing::for_each_sign_matrix;
using permlab::testing::random_matrix;

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix permute(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = m(rows[i], cols[j]);
        }
    }
    return out;
}

}  // namespace

TEST(permanent_naive, small_cases) {
    EXPECT_EQ(permanent_naive(identity(3)), 1);
    EXPECT_EQ(permanent_naive(IntMatrix{{1, 1}, {1, 1}}), 2);
    EXPECT_EQ(permanent_naive(IntMatrix{{1, 1}, {1, -1}}), 0);
    EXPECT_EQ(permanent_naive(IntMatrix{}), 1);
}

TEST(permanent_ryser, small_cases) {
    EXPECT_EQ(permanent_ryser(identity(3)), 1);
    EXPECT_EQ(permanent_ryser(IntMatrix{{-1}}), -1);
    EXPECT_EQ(permanent_ryser(IntMatrix{}), 1);
    EXPECT_EQ(permanent_ryser(IntMatrix{{1, 1}, {1, -1}}), 0);
}

TEST(permanent_ryser, all_ones_is_factorial) {
    BigInt fact = 1;
    for (std::size_t n = 1; n <= 20; ++n) {
        fact *= n;
        IntMatrix ones(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                ones(i, j) = 1;
            }
        }
        EXPECT_EQ(permanent_ryser(ones), fact) << "n=" << n;
    }
}

TEST(permanent_ryser, matches_naive_on_every_3x3_sign_matrix) {
    std::size_t count = 0;
    for_each_sign_matrix(3, [&](const IntMatrix& x) {
        ASSERT_EQ(permanent_ryser(x), permanent_naive(x)) << x;
        ++count;
    });
    EXPECT_EQ(count, 19683u);
}

TEST(permanent_ryser, matches_naive_on_random_integer_matrices) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const IntMatrix m = random_matrix(n, -9, 9, rng);
        ASSERT_EQ(permanent_ryser(m), permanent_naive(m)) << m;
    }
}

TEST(permanent_ryser, modular_path_matches_naive_on_huge_entries) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> big(-(1LL << 60), 1LL << 60);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = BigInt(big(rng)) * BigInt(big(rng));
            }
        }
        ASSERT_EQ(permanent_ryser(m), permanent_naive(m)) << m;
    }
}

TEST(permanent_ryser, multi_limb_path_matches_naive) {
    // Row sums fit in 64 bits but products need 192 to 512 bits.
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const long long r = trial % 3 == 0 ? 1'000'000 : (trial % 3 == 1 ? 1'000'000'000'000LL : 100'000'000'000'000'000LL);
        const IntMatrix m = random_matrix(n, -r, r, rng);
        ASSERT_EQ(permanent_ryser(m), permanent_naive(m)) << m;
    }
}

TEST(permanent_ryser, multi_limb_path_matches_modular_path) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const IntMatrix m = random_matrix(10 + trial % 8, -1000, 1000, rng);
        ASSERT_EQ(permanent_ryser(m), permanent_ryser(m, {1, RyserArithmetic::modular})) << m;
    }
    const IntMatrix dense = random_matrix(17, -99, 99, rng);
    EXPECT_EQ(permanent_ryser(dense, {3}), permanent_ryser(dense, {1, RyserArithmetic::modular}));
}

TEST(permanent_ryser, forced_modular_path_agrees_with_int128_path) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = random_matrix(2 + trial % 9, -5, 5, rng);
        EXPECT_EQ(permanent_ryser(m, {1, RyserArithmetic::modular}), permanent_ryser(m));
    }
}

TEST(permanent_ryser, threaded_result_is_identical) {
    std::mt19937_64 rng(3);
    const IntMatrix m = random_matrix(17, -1, 1, rng);
    const BigInt single = permanent_ryser(m, {1});
    EXPECT_EQ(permanent_ryser(m, {4}), single);
    EXPECT_EQ(permanent_ryser(m, {3, RyserArithmetic::modular}), single);
}

TEST(permanent_ryser, accumulator_spill_beyond_128_bits) {
    // Rows of 2^40 push single products near 2^120 and the sum past 2^127.
    const std::size_t n = 3;
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = BigInt(1) << 40;
        }
    }
    EXPECT_EQ(permanent_ryser(m), BigInt(6) << 120);
}

TEST(permanent_properties, invariant_under_row_and_column_permutations) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix m = random_matrix(n, -4, 4, rng);
        std::vector<std::size_t> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        EXPECT_EQ(permanent_naive(permute(m, rows, cols)), permanent_naive(m));
    }
}

TEST(permanent_properties, laplace_expansion_along_any_row) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix m = random_matrix(n, -3, 3, rng);
        const BigInt expected = permanent_naive(m);
        for (std::size_t row = 0; row < n; ++row) {
            BigInt sum = 0;
            for (std::size_t j = 0; j < n; ++j) {
                sum += m(row, j) * permanent_naive(minor(m, row, j));
            }
            ASSERT_EQ(sum, expected);
        }
    }
}

TEST(permanent_properties, multilinear_in_rows) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> scale(-7, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m = random_matrix(n, -3, 3, rng);
        const BigInt before = permanent_naive(m);
        const long long c = scale(rng);
        const std::size_t row = static_cast<std::size_t>(trial) % n;
        for (std::size_t j = 0; j < n; ++j) {
            m(row, j) *= c;
        }
        EXPECT_EQ(permanent_naive(m), before * c);
    }
}

TEST(permanent_complex, basic_values) {
    ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
    EXPECT_NEAR(std::abs(permanent_complex(eye) - std::complex<double>(1, 0)), 0.0, 1e-12);
    ComplexMatrix diag = ComplexMatrix::Zero(2, 2);
    diag(0, 0) = diag(1, 1) = {0, 1};
    EXPECT_NEAR(std::abs(permanent_complex(diag) - std::complex<double>(-1, 0)), 0.0, 1e-12);
    EXPECT_EQ(permanent_complex(ComplexMatrix(0, 0)), std::complex<double>(1, 0));
}

TEST(permanent_complex, matches_integer_engine) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const IntMatrix m = random_matrix(n, -5, 5, rng);
        ComplexMatrix c(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
            }
        }
        const double exact = static_cast<double>(permanent_naive(m));
        const auto got = permanent_complex(c);
        EXPECT_LE(std::abs(got - exact), 1e-9 * std::max(1.0, std::abs(exact))) << m;
    }
}

TEST(permanent_complex, rejects_non_square) { EXPECT_THROW(permanent_complex(ComplexMatrix(2, 3)), InvalidInput); }

TEST(int_matrix, minor_and_rotation) {
    EXPECT_EQ(minor(identity(3), 0, 0), identity(2));
    EXPECT_EQ(minor(IntMatrix{{7}}, 0, 0), IntMatrix{});
    EXPECT_THROW(minor(identity(3), 3, 0), IndexOutOfRange);
    EXPECT_THROW(minor(IntMatrix{}, 0, 0), IndexOutOfRange);

    const IntMatrix m{{1, 2}, {3, 4}};
    EXPECT_EQ(rotate_column_to_front(m, 0), m);
    EXPECT_EQ(rotate_column_to_front(m, 1), (IntMatrix{{2, 1}, {4, 3}}));
    EXPECT_THROW(rotate_column_to_front(m, 2), IndexOutOfRange);
}

TEST(int_matrix, rotation_preserves_permanent_and_exposes_minor) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 30; ++trial) {
        const IntMatrix m = random_matrix(4, -3, 3, rng);
        for (std::size_t j = 0; j < 4; ++j) {
            const IntMatrix r = rotate_column_to_front(m, j);
            EXPECT_EQ(permanent_naive(r), permanent_naive(m));
            EXPECT_EQ(minor(r, 0, 0), minor(m, 0, j));
        }
    }
}

TEST(int_matrix, parses_text_and_json) {
    const IntMatrix expected{{1, -2}, {3, 4}};
    EXPECT_EQ(parse_matrix("2\n1 -2\n3 4\n"), expected);
    EXPECT_EQ(parse_matrix(R"({"entries": [[1, -2], [3, "4"]]})"), expected);
    EXPECT_EQ(parse_matrix("0\n"), IntMatrix{});
    EXPECT_EQ(parse_matrix(expected.str()), expected);
    EXPECT_EQ(parse_matrix("1\n123456789012345678901234567890")(0, 0), BigInt("123456789012345678901234567890"));
}

TEST(int_matrix, rejects_malformed_input) {
    EXPECT_THROW(parse_matrix(""), InvalidInput);
    EXPECT_THROW(parse_matrix("2\n1 2\n3"), InvalidInput);
    EXPECT_THROW(parse_matrix("2\n1 2\n3 4 5"), InvalidInput);
    EXPECT_THROW(parse_matrix("2\n1 x\n3 4"), InvalidInput);
    EXPECT_THROW(parse_matrix(R"({"entries": [[1, 2], [3]]})"), InvalidInput);
    EXPECT_THROW(parse_matrix(R"({"rows": []})"), InvalidInput);
    EXPECT_THROW(parse_matrix(R"({"entries": [[1.5]]})"), InvalidInput);
}
