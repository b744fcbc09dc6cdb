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

#include "permlab/recovery.hpp"

#include <cmath>
#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "permlab/errors.hpp"
#include "permlab/gadgets.hpp"
#include "permlab/permanent.hpp"
#include "test_util.hpp"

using namespace permlab;
using permlab::testing::for_each_sign_matrix;
using permlab::testing::random_sign_matrix;

namespace {

const AdviceSet& advice() {
    static const AdviceSet set = load_advice_set(3, default_advice_dir());
    return set;
}

std::size_t ceil_log2(std::size_t v) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < v) {
        ++r;
    }
    return r;
}

}  // namespace

TEST(exact_oracle, answers_squared_permanent) {
    auto oracle = make_exact_oracle();
    EXPECT_EQ(oracle->factor(), 1.0);
    EXPECT_EQ(oracle->query(IntMatrix{{1, 1}, {1, 1}}), 4.0);
    EXPECT_EQ(oracle->query(IntMatrix{{1, 1}, {1, -1}}), 0.0);
    EXPECT_EQ(oracle->query_count(), 2u);
    oracle->reset_query_count();
    EXPECT_EQ(oracle->query_count(), 0u);
}

TEST(noisy_oracle, stays_within_factor_and_preserves_zero) {
    auto oracle = make_noisy_oracle(1.5, 7);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix x = random_sign_matrix(3, rng);
        const double exact = static_cast<double>(permanent_naive(x) * permanent_naive(x));
        const double got = oracle->query(x);
        if (exact == 0.0) {
            ASSERT_EQ(got, 0.0);
        } else {
            ASSERT_GE(got, exact / 1.5);
            ASSERT_LE(got, exact * 1.5);
        }
    }
}

TEST(noisy_oracle, seeded_and_validated) {
    auto a = make_noisy_oracle(2.0, 3);
    auto b = make_noisy_oracle(2.0, 3);
    const IntMatrix x{{1, 1}, {1, 1}};
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(a->query(x), b->query(x));
    }
    EXPECT_EQ(make_noisy_oracle(1.0, 0)->query(x), 4.0);
    EXPECT_THROW(make_noisy_oracle(0.5, 0), InvalidInput);
}

TEST(boson_oracle, exact_mode_matches_squared_permanent) {
    auto oracle = make_boson_oracle(BosonOracleMode::exact());
    for_each_sign_matrix(2, [&](const IntMatrix& x) {
        const double exact = static_cast<double>(permanent_naive(x) * permanent_naive(x));
        ASSERT_NEAR(oracle->query(x), exact, 1e-9 * std::max(1.0, exact)) << x;
    });
    EXPECT_EQ(oracle->query(IntMatrix{}), 1.0);
}

TEST(boson_oracle, empirical_mode_is_close_on_small_inputs) {
    auto oracle = make_boson_oracle(BosonOracleMode::empirical(200000, 5));
    // Per^2 = 4, p = 4/16 = 1/4; the estimate's sd is about 0.016 after rescaling.
    EXPECT_NEAR(oracle->query(IntMatrix{{1, 1}, {1, 1}}), 4.0, 0.2);
    EXPECT_EQ(oracle->query(IntMatrix{{0, 0}, {1, 1}}), 0.0);
}

TEST(boson_oracle, enforces_dimension_limits) {
    auto exact = make_boson_oracle(BosonOracleMode::exact());
    EXPECT_THROW(exact->query(IntMatrix(kBosonOracleExactMaxDim + 1)), LimitExceeded);
    auto empirical = make_boson_oracle(BosonOracleMode::empirical(10, 1));
    EXPECT_THROW(empirical->query(IntMatrix(3)), LimitExceeded);
}

TEST(recover_permanent, exact_oracle_on_every_2x2) {
    auto oracle = make_exact_oracle();
    for_each_sign_matrix(2, [&](const IntMatrix& x) {
        ASSERT_EQ(recover_permanent(x, *oracle, advice()), permanent_naive(x)) << x;
    });
}

TEST(recover_permanent, exact_oracle_on_random_3x3) {
    auto oracle = make_exact_oracle();
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix x = random_sign_matrix(3, rng);
        ASSERT_EQ(recover_permanent(x, *oracle, advice()), permanent_naive(x)) << x;
    }
}

TEST(recover_permanent, noisy_oracle_gives_identical_results) {
    std::mt19937_64 rng(43);
    std::vector<IntMatrix> inputs;
    for_each_sign_matrix(2, [&](const IntMatrix& x) { inputs.push_back(x); });
    for (int trial = 0; trial < 40; ++trial) {
        inputs.push_back(random_sign_matrix(3, rng));
    }
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto oracle = make_noisy_oracle(1.05, seed);
        for (const auto& x : inputs) {
            ASSERT_EQ(recover_permanent(x, *oracle, advice()), permanent_naive(x)) << "seed=" << seed << x;
        }
    }
}

TEST(recover_permanent, boson_oracle_recovers_2x2) {
    auto oracle = make_boson_oracle(BosonOracleMode::exact());
    for_each_sign_matrix(2, [&](const IntMatrix& x) {
        ASSERT_EQ(recover_permanent(x, *oracle, advice()), permanent_naive(x)) << x;
    });
}

TEST(recover_permanent, linear_mode_agrees) {
    auto oracle = make_exact_oracle();
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix x = random_sign_matrix(3, rng);
        ASSERT_EQ(recover_permanent(x, *oracle, advice(), {SearchMode::linear}), permanent_naive(x));
    }
}

TEST(recover_permanent, queries_per_level_are_bounded) {
    auto oracle = make_exact_oracle();
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix x = random_sign_matrix(3, rng);
        RecoveryTrace trace;
        oracle->reset_query_count();
        recover_permanent(x, *oracle, advice(), {}, &trace);
        std::size_t total = 0;
        for (const auto& level : trace.levels) {
            const std::size_t table = level.dim >= 2 ? advice().at(level.dim).entries.size() : 0;
            // One zero test, up to dim minor tests, two probes per halving.
            const std::size_t bound = 1 + level.dim + 2 * (ceil_log2(table + 1) + 1);
            EXPECT_LE(level.queries, bound) << "dim " << level.dim << " outcome " << level.outcome;
            EXPECT_FALSE(level.fallback);
            total += level.queries;
        }
        EXPECT_EQ(total, oracle->query_count());
    }
}

TEST(advice_distance, has_unique_zero_and_is_valley_shaped) {
    auto oracle = make_exact_oracle();
    const AdviceTable& table = advice().at(2);
    for_each_sign_matrix(2, [&](const IntMatrix& x) {
        if (permanent_naive(minor(x, 0, 0)) == 0) {
            return;
        }
        std::vector<double> t;
        for (const auto& e : table.entries) {
            t.push_back(advice_distance(e, x, *oracle));
        }
        std::size_t zeros = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 0.0) {
                ++zeros;
                at = i;
            }
        }
        ASSERT_EQ(zeros, 1u) << x;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            if (i < at) {
                ASSERT_GT(t[i], t[i + 1]) << x;
            } else {
                ASSERT_LT(t[i], t[i + 1]) << x;
            }
        }
        // t equals |Per(X) + ratio Per(X^{1,1})|.
        const double a = static_cast<double>(permanent_naive(x));
        const double b = static_cast<double>(permanent_naive(minor(x, 0, 0)));
        for (std::size_t i = 0; i < t.size(); ++i) {
            ASSERT_NEAR(t[i], std::abs(a + static_cast<double>(table.entries[i].ratio) * b), 1e-12);
        }
    });
}

TEST(recover_permanent, missing_advice) {
    auto oracle = make_exact_oracle();
    EXPECT_THROW(recover_permanent(IntMatrix{{1, 1}, {1, 1}}, *oracle, AdviceSet{}), MissingAdvice);
    // Base case and zero permanent need no advice.
    EXPECT_EQ(recover_permanent(IntMatrix{{-1}}, *oracle, AdviceSet{}), -1);
    EXPECT_EQ(recover_permanent(IntMatrix{{1, 1}, {1, -1}}, *oracle, AdviceSet{}), 0);
}

TEST(recover_permanent, incomplete_table_exhausts_search) {
    auto oracle = make_exact_oracle();
    AdviceSet partial = advice();
    auto& entries = partial.at(2).entries;
    // Per(J) = 2, Per(J^{1,1}) = 1: the cancelling ratio is -2.
    ASSERT_EQ(entries.front().ratio, Rational(-2));
    entries.erase(entries.begin());
    RecoveryTrace trace;
    EXPECT_THROW(recover_permanent(IntMatrix{{1, 1}, {1, 1}}, *oracle, partial, {}, &trace), SearchExhausted);
    ASSERT_FALSE(trace.levels.empty());
    EXPECT_STREQ(trace.levels.front().outcome, "exhausted");
    EXPECT_TRUE(trace.levels.front().fallback);
}

TEST(recover_permanent, rejects_non_sign_input) {
    auto oracle = make_exact_oracle();
    EXPECT_THROW(recover_permanent(IntMatrix{{2}}, *oracle, advice()), InvalidInput);
}
