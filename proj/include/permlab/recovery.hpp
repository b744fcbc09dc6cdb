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

#ifndef PERMLAB_RECOVERY_HPP
#define PERMLAB_RECOVERY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "permlab/advice.hpp"
#include "permlab/errors.hpp"
#include "permlab/int_matrix.hpp"
#include "permlab/oracle.hpp"

namespace permlab {

/// No advice table was supplied for a dimension the recursion reached.
class MissingAdvice : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

/// No advice gadget cancelled the permanent: the table is incomplete or the
/// oracle broke its contract.
class SearchExhausted : public VerificationFailure {
   public:
    using VerificationFailure::VerificationFailure;
};

enum class SearchMode {
    /// Probe the two middle points of the interval and keep the half holding
    /// the smaller value; on failure fall back to a linear scan.
    bisect,
    /// Scan the table front to back.
    linear,
};

/// Per recursion level, outermost first.
struct RecoveryLevel {
    std::size_t dim = 0;
    std::size_t queries = 0;
    std::optional<std::size_t> advice_index;
    bool fallback = false;
    /// Short description of how the level terminated.
    const char* outcome = "";
};

struct RecoveryTrace {
    std::vector<RecoveryLevel> levels;
};

struct RecoveryOptions {
    SearchMode mode = SearchMode::bisect;
};

/// Computes Per(X) exactly for X over {-1,0,1} from a Per^2 approximation
/// oracle and gadget advice for every dimension 1..n.
///
/// Per level: a 1x1 matrix is its own permanent; a zero oracle answer means
/// Per(X) == 0; otherwise the first-row minors are probed and a column with a
/// nonzero minor is rotated to the front, Per(X^{1,1}) is recovered
/// recursively, and the advice table is searched for the gadget whose W
/// matrix the oracle reports as 0. Then Per(X) = -ratio * Per(X^{1,1}).
///
/// Throws InvalidInput on a non-sign matrix, MissingAdvice, SearchExhausted.
BigInt recover_permanent(const IntMatrix& x, ApproxOracle& oracle, const AdviceSet& advice,
                         const RecoveryOptions& options = {}, RecoveryTrace* trace = nullptr);

/// sqrt(oracle(W_i)) / |alpha_i| for W_i = build_w(Z_i, x); approximates |Per(x) + ratio_i Per(x^{1,1})|.
double advice_distance(const AdviceEntry& entry, const IntMatrix& x, ApproxOracle& oracle);

}  // namespace permlab

#endif  // PERMLAB_RECOVERY_HPP
