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

#include "permlab/boson.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "permlab/errors.hpp"
#include "permlab/permanent.hpp"
#include "test_util.hpp"

using namespace permlab;
using permlab::testing::for_each_sign_matrix;

TEST(fock, state_counts) {
    EXPECT_EQ(enumerate_states(2, 1).size(), 2u);
    EXPECT_EQ(enumerate_states(3, 2).size(), 6u);
    EXPECT_EQ(enumerate_states(4, 3).size(), 20u);
    EXPECT_EQ(state_count(4, 3), 20);
    EXPECT_EQ(state_count(10, 5), 2002);
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::size_t n = 0; n <= 4; ++n) {
            EXPECT_EQ(BigInt(enumerate_states(m, n).size()), state_count(m, n));
        }
    }
}

TEST(fock, enumeration_order) {
    const auto states = enumerate_states(2, 1);
    EXPECT_EQ(states[0], (FockState{{1, 0}}));
    EXPECT_EQ(states[1], (FockState{{0, 1}}));
    const auto three = enumerate_states(3, 2);
    EXPECT_EQ(three.front(), (FockState{{2, 0, 0}}));
    EXPECT_EQ(three.back(), (FockState{{0, 0, 2}}));
    EXPECT_TRUE(std::is_sorted(three.rbegin(), three.rend()));
    for (const auto& s : three) {
        EXPECT_EQ(s.total(), 2u);
    }
}

TEST(fock, unit_state) {
    EXPECT_EQ(unit_state(4, 2), (FockState{{1, 1, 0, 0}}));
    EXPECT_THROW(unit_state(2, 3), InvalidInput);
}

TEST(linear_network, validation) {
    EXPECT_THROW(LinearNetwork(ComplexMatrix::Ones(2, 2)), InvalidInput);
    EXPECT_THROW(LinearNetwork(ComplexMatrix::Identity(2, 3)), InvalidInput);
    EXPECT_NO_THROW(LinearNetwork(ComplexMatrix::Identity(3, 2)));
}

TEST(random_network, is_orthonormal_and_seeded) {
    const auto a = random_network(5, 3, 1);
    EXPECT_LT(orthonormality_error(a.matrix()), 1e-12);
    EXPECT_EQ(random_network(5, 3, 1).matrix(), a.matrix());
    EXPECT_NE(random_network(5, 3, 2).matrix(), a.matrix());
}

TEST(outcome_probability, bunched_state_uses_repeated_rows) {
    // 50:50 beam splitter with two photons: HOM dip, Pr(1,1) = 0.
    ComplexMatrix bs(2, 2);
    const double r = 1.0 / std::sqrt(2.0);
    bs << r, r, r, -r;
    const LinearNetwork net(bs);
    EXPECT_NEAR(outcome_probability(net, FockState{{1, 1}}), 0.0, 1e-15);
    EXPECT_NEAR(outcome_probability(net, FockState{{2, 0}}), 0.5, 1e-12);
    EXPECT_NEAR(outcome_probability(net, FockState{{0, 2}}), 0.5, 1e-12);
}

TEST(full_distribution, normalizes_on_random_networks) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t k = 1 + seed % 3;
        const std::size_t m = k + seed % (6 - k);
        const auto dist = full_distribution(random_network(m, k, seed));
        const double total = std::accumulate(dist.probs.begin(), dist.probs.end(), 0.0);
        ASSERT_NEAR(total, 1.0, 1e-9) << "m=" << m << " k=" << k;
    }
}

TEST(full_distribution, independent_of_thread_count) {
    const auto net = random_network(5, 3, 9);
    EXPECT_EQ(full_distribution(net, 1).probs, full_distribution(net, 3).probs);
}

TEST(sample, matches_distribution) {
    const auto dist = full_distribution(random_network(3, 2, 4));
    const auto samples = sample(dist, 12, 100000);
    EXPECT_EQ(samples.size(), 100000u);
    EXPECT_LT(total_variation(dist, samples), 0.02);
    EXPECT_EQ(sample(dist, 12, 100), std::vector<FockState>(samples.begin(), samples.begin() + 100));
}

TEST(embed_scaled, reproduces_scaled_permanent) {
    for_each_sign_matrix(2, [](const IntMatrix& m) {
        const LinearNetwork net = embed_scaled(m, 0.5);
        ASSERT_EQ(net.modes(), 4u);
        ASSERT_LT(orthonormality_error(net.matrix()), 1e-12);
        const double per = static_cast<double>(permanent_naive(m));
        ASSERT_NEAR(outcome_probability(net, unit_state(4, 2)), per * per / 16.0, 1e-9) << m;
    });
}

TEST(embed_scaled, three_by_three) {
    const IntMatrix m{{1, 1, 0}, {1, -1, 1}, {0, 1, 1}};
    const double eps = 1.0 / 3.0;
    const LinearNetwork net = embed_scaled(m, eps);
    const double per = static_cast<double>(permanent_naive(m));
    EXPECT_NEAR(outcome_probability(net, unit_state(6, 3)), std::pow(eps, 6) * per * per, 1e-12);
}

TEST(embed_scaled, rejects_bad_input) {
    EXPECT_THROW(embed_scaled(IntMatrix{{2}}, 0.5), InvalidInput);
    EXPECT_THROW(embed_scaled(IntMatrix{{1, 1}, {1, 1}}, 0.9), InvalidInput);
    EXPECT_THROW(embed_scaled(IntMatrix{{1}}, 0.0), InvalidInput);
}

TEST(network_json, round_trip) {
    const auto net = random_network(4, 2, 3);
    const auto back = parse_network(network_to_json(net));
    EXPECT_LT((back.matrix() - net.matrix()).norm(), 1e-15);
    EXPECT_THROW(parse_network("{}"), InvalidInput);
    EXPECT_THROW(parse_network("not json"), InvalidInput);
}
