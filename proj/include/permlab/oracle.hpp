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

#ifndef PERMLAB_ORACLE_HPP
#define PERMLAB_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "permlab/int_matrix.hpp"

namespace permlab {

/// Black box returning a multiplicative approximation of Per(X)^2:
///
///     Per(X)^2 / g <= answer <= g * Per(X)^2,
///
/// which in particular answers exactly 0 iff Per(X) == 0.
class ApproxOracle {
   public:
    virtual ~ApproxOracle() = default;

    /// Counts the query, then answers it.
    double query(const IntMatrix& x) {
        ++queries_;
        return answer(x);
    }

    /// Approximation factor g >= 1.
    virtual double factor() const = 0;
    virtual std::string name() const = 0;

    std::size_t query_count() const noexcept { return queries_; }
    void reset_query_count() noexcept { queries_ = 0; }

   protected:
    virtual double answer(const IntMatrix& x) = 0;

   private:
    std::size_t queries_ = 0;
};

/// g = 1: answers Per(X)^2 computed with permanent_ryser.
std::unique_ptr<ApproxOracle> make_exact_oracle();

/// Answers Per(X)^2 * u, u uniform on [1/g, g], drawn per query from a stream
/// seeded by `seed`. Zero permanents are answered with exactly 0.
/// Throws InvalidInput if g < 1.
std::unique_ptr<ApproxOracle> make_noisy_oracle(double g, std::uint64_t seed);

struct BosonOracleMode {
    enum class Kind { exact, empirical };
    Kind kind = Kind::exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static BosonOracleMode exact() { return {}; }
    static BosonOracleMode empirical(std::uint64_t samples, std::uint64_t seed) {
        return {Kind::empirical, samples, seed};
    }
};

/// Largest input dimension each boson oracle mode accepts.
inline constexpr std::size_t kBosonOracleExactMaxDim = 12;
inline constexpr std::size_t kBosonOracleEmpiricalMaxDim = 2;

/// Embeds eps*M (eps = 1/k) into a 2k x k BosonSampling network, obtains the
/// probability p of one photon in each of the first k modes, and answers
/// p / eps^{2k}. Exact mode evaluates p from the outcome probability; empirical
/// mode estimates it from `samples` exact samples of the full distribution.
///
/// Since Per(M)^2 is a nonnegative integer, exact-mode answers below 1/2 are
/// reported as 0; this keeps zero detection exact under rounding. Throws
/// LimitExceeded when the dimension exceeds the mode's limit.
std::unique_ptr<ApproxOracle> make_boson_oracle(BosonOracleMode mode);

}  // namespace permlab

#endif  // PERMLAB_ORACLE_HPP
