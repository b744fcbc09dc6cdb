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

#include "permlab/oracle.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "permlab/boson.hpp"
#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

namespace {

double squared_permanent(const IntMatrix& x) {
    const BigInt p = permanent_ryser(x);
    return static_cast<double>(BigInt(p * p));
}

class ExactOracle final : public ApproxOracle {
   public:
    double factor() const override { return 1.0; }
    std::string name() const override { return "exact"; }

   protected:
    double answer(const IntMatrix& x) override { return squared_permanent(x); }
};

class NoisyOracle final : public ApproxOracle {
   public:
    NoisyOracle(double g, std::uint64_t seed) : g_(g), rng_(seed), noise_(1.0 / g, g) {}

    double factor() const override { return g_; }
    std::string name() const override {
        std::ostringstream out;
        out << "noisy:" << std::setprecision(12) << g_;
        return out.str();
    }

   protected:
    double answer(const IntMatrix& x) override {
        const double exact = squared_permanent(x);
        // Draw even for zero answers so the stream position depends only on
        // the number of queries.
        const double u = g_ == 1.0 ? 1.0 : noise_(rng_);
        if (exact == 0.0) {
            return 0.0;
        }
        // Clamp guards the interval ends against rounding in the product.
        return std::clamp(exact * u, exact / g_, exact * g_);
    }

   private:
    double g_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> noise_;
};

class BosonOracle final : public ApproxOracle {
   public:
    explicit BosonOracle(BosonOracleMode mode) : mode_(mode) {}

    double factor() const override { return 1.0; }
    std::string name() const override {
        return mode_.kind == BosonOracleMode::Kind::exact ? "boson" : "boson-empirical";
    }

   protected:
    double answer(const IntMatrix& x) override {
        const std::size_t k = x.dim();
        if (k == 0) {
            return 1.0;
        }
        const bool exact = mode_.kind == BosonOracleMode::Kind::exact;
        const std::size_t limit = exact ? kBosonOracleExactMaxDim : kBosonOracleEmpiricalMaxDim;
        if (k > limit) {
            throw LimitExceeded("boson oracle: dimension " + std::to_string(k) + " exceeds " +
                                std::to_string(limit) + " in " + name() + " mode");
        }
        const double eps = 1.0 / static_cast<double>(k);
        const double scale = std::pow(eps, 2.0 * static_cast<double>(k));
        const LinearNetwork net = embed_scaled(x, eps);
        const FockState target = unit_state(2 * k, k);

        if (exact) {
            const double value = outcome_probability(net, target) / scale;
            return value < 0.5 ? 0.0 : value;
        }
        const BosonDistribution dist = full_distribution(net, 1);
        const auto draws = sample(dist, mix_seed(mode_.seed, query_count()), mode_.samples);
        std::uint64_t hits = 0;
        for (const auto& s : draws) {
            hits += s == target ? 1 : 0;
        }
        const double p_hat = static_cast<double>(hits) / static_cast<double>(mode_.samples);
        return p_hat / scale;
    }

   private:
    BosonOracleMode mode_;
};

}  // namespace

std::unique_ptr<ApproxOracle> make_exact_oracle() { return std::make_unique<ExactOracle>(); }

std::unique_ptr<ApproxOracle> make_noisy_oracle(double g, std::uint64_t seed) {
    if (!(g >= 1.0) || !std::isfinite(g)) {
        throw InvalidInput("noisy oracle: approximation factor must be a finite g >= 1");
    }
    return std::make_unique<NoisyOracle>(g, seed);
}

std::unique_ptr<ApproxOracle> make_boson_oracle(BosonOracleMode mode) {
    if (mode.kind == BosonOracleMode::Kind::empirical && mode.samples == 0) {
        throw InvalidInput("boson oracle: empirical mode needs at least one sample");
    }
    return std::make_unique<BosonOracle>(mode);
}

}  // namespace permlab
