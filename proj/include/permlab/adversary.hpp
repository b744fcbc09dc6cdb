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

#ifndef PERMLAB_ADVERSARY_HPP
#define PERMLAB_ADVERSARY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "permlab/function_table.hpp"
#include "permlab/int_matrix.hpp"

namespace permlab {

/// Classical queries answered so far; inputs and answers are both distinct.
class QueryTranscript {
   public:
    explicit QueryTranscript(unsigned n);

    unsigned bits() const noexcept { return n_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs() const noexcept { return pairs_; }
    std::optional<std::uint64_t> answer_for(std::uint64_t x) const;
    bool answer_used(std::uint64_t y) const { return answers_.contains(y); }

    /// Throws InvalidInput if x was queried, y was already answered, or either is out of range.
    void record(std::uint64_t x, std::uint64_t y);

   private:
    unsigned n_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
    std::set<std::uint64_t> inputs_;
    std::set<std::uint64_t> answers_;
};

/// Answers `x` with a value not yet used, drawn uniformly from a stream keyed
/// by (seed, transcript size, x). A repeated query returns its recorded answer.
std::uint64_t lazy_query(QueryTranscript& transcript, std::uint64_t x, std::uint64_t seed);

/// { x_i ^ x_j : i < j } over the queried inputs.
std::set<std::uint64_t> restricted_masks(const QueryTranscript& transcript);

/// A Simon function agreeing with the transcript whose mask is a uniformly
/// random nonzero value outside restricted_masks(). Throws InvalidInput when
/// 2^n - 1 <= l(l-1)/2 or no admissible mask remains.
FunctionTable commit_simon(const QueryTranscript& transcript, std::uint64_t seed);

/// A uniformly random bijection agreeing with the transcript.
FunctionTable commit_injective(const QueryTranscript& transcript, std::uint64_t seed);

/// (l - 1) / (2^n - 1 - l(l-1)/2), exactly. Throws InvalidInput if the
/// denominator is not positive.
Rational collision_probability(unsigned n, std::uint64_t l);

struct ExperimentResult {
    std::uint64_t trials = 0;
    std::uint64_t collisions = 0;
    double rate = 0.0;
    /// Binomial standard error sqrt(rate (1 - rate) / trials).
    double standard_error = 0.0;
};

/// Per trial: a fresh random Simon table, l distinct uniformly random
/// queries, and a check whether two of them share an output. Trials run on
/// `threads` workers (0 = worker_count()) with per-trial seeds, so the result
/// does not depend on the thread count. Throws InvalidInput if n > 12,
/// l > 2^n or trials == 0.
ExperimentResult run_distinguishing_experiment(unsigned n, std::uint64_t l, std::uint64_t trials,
                                               std::uint64_t seed, unsigned threads = 0);

}  // namespace permlab

#endif  // PERMLAB_ADVERSARY_HPP
