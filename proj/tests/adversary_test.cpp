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

#include "permlab/adversary.hpp"

#include <random>

#include "gtest/gtest.h"
#include "permlab/errors.hpp"

using namespace permlab;

TEST(transcript, records_distinct_pairs) {
    QueryTranscript t(3);
    t.record(1, 5);
    EXPECT_EQ(t.answer_for(1), 5u);
    EXPECT_EQ(t.answer_for(2), std::nullopt);
    EXPECT_TRUE(t.answer_used(5));
    EXPECT_THROW(t.record(1, 6), InvalidInput);
    EXPECT_THROW(t.record(2, 5), InvalidInput);
    EXPECT_THROW(t.record(8, 0), InvalidInput);
}

TEST(lazy_query, answers_fresh_values_and_repeats) {
    QueryTranscript t(4);
    const auto a = lazy_query(t, 3, 9);
    EXPECT_EQ(lazy_query(t, 3, 9), a);
    EXPECT_EQ(t.size(), 1u);
    for (std::uint64_t x = 0; x < 16; ++x) {
        lazy_query(t, x, 9);
    }
    std::set<std::uint64_t> answers;
    for (const auto& [x, y] : t.pairs()) {
        answers.insert(y);
    }
    EXPECT_EQ(answers.size(), 16u);
}

TEST(restricted_masks, pairwise_xors) {
    QueryTranscript t(3);
    t.record(1, 0);
    t.record(2, 1);
    t.record(4, 2);
    EXPECT_EQ(restricted_masks(t), (std::set<std::uint64_t>{3, 5, 6}));
}

TEST(commit_simon, consistent_and_avoids_restricted_masks) {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::uint64_t> pick(0, 255);
    for (int trial = 0; trial < 2000; ++trial) {
        QueryTranscript t(8);
        while (t.size() < 10) {
            lazy_query(t, pick(rng), rng());
        }
        const FunctionTable f = commit_simon(t, rng());
        ASSERT_EQ(f.kind, FunctionTable::Kind::simon);
        ASSERT_EQ(restricted_masks(t).count(f.mask), 0u);
        for (const auto& [x, y] : t.pairs()) {
            ASSERT_EQ(f(x), y);
        }
        validate(f);
    }
}

TEST(commit_simon, refuses_when_masks_run_out) {
    QueryTranscript t(2);
    for (std::uint64_t x = 0; x < 3; ++x) {
        lazy_query(t, x, 1);
    }
    EXPECT_THROW(commit_simon(t, 0), InvalidInput);
}

TEST(commit_injective, consistent) {
    QueryTranscript t(5);
    for (std::uint64_t x = 0; x < 7; ++x) {
        lazy_query(t, x * 3, 2);
    }
    const FunctionTable f = commit_injective(t, 4);
    for (const auto& [x, y] : t.pairs()) {
        EXPECT_EQ(f(x), y);
    }
    validate(f);
}

TEST(collision_probability, exact_values) {
    EXPECT_EQ(collision_probability(3, 2), make_rational(1, 6));
    EXPECT_EQ(collision_probability(4, 1), 0);
    EXPECT_EQ(collision_probability(8, 10), make_rational(9, 210));
    EXPECT_THROW(collision_probability(2, 3), InvalidInput);
    EXPECT_THROW(collision_probability(3, 0), InvalidInput);
}

TEST(distinguishing_experiment, matches_pair_count_oracle) {
    // P(some pair collides) for l distinct queries into a 2-to-1 function on
    // 2^n inputs: 1 - C(N/2, l) 2^l / C(N, l), computed exactly offline.
    const double expected = 0.16689877;
    const auto r = run_distinguishing_experiment(8, 10, 20000, 17);
    EXPECT_LT(std::abs(r.rate - expected), 5 * r.standard_error);
    EXPECT_EQ(run_distinguishing_experiment(8, 10, 500, 3, 1).collisions,
              run_distinguishing_experiment(8, 10, 500, 3, 3).collisions);
}

TEST(distinguishing_experiment, small_brute_force_values) {
    // Exhaustive enumeration: (n=3, l=3) -> 3/7 and (n=4, l=3) -> 1/5.
    const auto a = run_distinguishing_experiment(3, 3, 40000, 5);
    EXPECT_LT(std::abs(a.rate - 3.0 / 7), 5 * a.standard_error);
    const auto b = run_distinguishing_experiment(4, 3, 40000, 6);
    EXPECT_LT(std::abs(b.rate - 0.2), 5 * b.standard_error);
    EXPECT_THROW(run_distinguishing_experiment(13, 2, 1, 0), InvalidInput);
    EXPECT_THROW(run_distinguishing_experiment(3, 9, 1, 0), InvalidInput);
}
