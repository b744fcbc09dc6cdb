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
#include <string>

#include "permlab/gadgets.hpp"

namespace permlab {

namespace {

class Recovery {
   public:
    Recovery(ApproxOracle& oracle, const AdviceSet& advice, const RecoveryOptions& options, RecoveryTrace* trace)
        : oracle_(oracle), advice_(advice), options_(options), trace_(trace) {}

    BigInt solve(const IntMatrix& x) {
        const std::size_t slot = open_level(x.dim());
        const std::size_t before = oracle_.query_count();
        auto finish = [&](const char* outcome) {
            if (trace_) {
                auto& lvl = trace_->levels[slot];
                lvl.outcome = outcome;
                // Exclude queries made by deeper levels.
                std::size_t deeper = 0;
                for (std::size_t s = slot + 1; s < trace_->levels.size(); ++s) {
                    deeper += trace_->levels[s].queries;
                }
                lvl.queries = oracle_.query_count() - before - deeper;
            }
        };

        const std::size_t n = x.dim();
        if (n == 0) {
            finish("empty");
            return 1;
        }
        if (n == 1) {
            finish("base");
            return x(0, 0);
        }
        if (oracle_.query(x) == 0.0) {
            finish("zero");
            return 0;
        }
        std::optional<std::size_t> column;
        for (std::size_t j = 0; j < n; ++j) {
            if (oracle_.query(minor(x, 0, j)) != 0.0) {
                column = j;
                break;
            }
        }
        if (!column) {
            finish("zero-minors");
            return 0;
        }

        const auto table_it = advice_.find(n);
        if (table_it == advice_.end() || table_it->second.entries.empty()) {
            throw MissingAdvice("no advice table for dimension " + std::to_string(n));
        }
        const AdviceTable& table = table_it->second;

        const IntMatrix rotated = rotate_column_to_front(x, *column);
        const BigInt sub = solve(minor(rotated, 0, 0));

        bool fallback = false;
        std::optional<std::size_t> index = search(table, rotated, fallback);
        if (trace_) {
            trace_->levels[slot].fallback = fallback;
            trace_->levels[slot].advice_index = index;
        }
        if (!index) {
            finish("exhausted");
            throw SearchExhausted("dimension " + std::to_string(n) + ": no advice gadget of " +
                                  std::to_string(table.entries.size()) +
                                  " cancels the permanent (incomplete advice or oracle contract violation)");
        }
        const Rational value = -table.entries[*index].ratio * Rational(sub);
        if (denominator(value) != 1) {
            finish("non-integral");
            throw SearchExhausted("dimension " + std::to_string(n) + ": recovered value " +
                                  numerator(value).str() + "/" + denominator(value).str() + " is not an integer");
        }
        finish(fallback ? "fallback" : "search");
        return numerator(value);
    }

   private:
    std::size_t open_level(std::size_t dim) {
        if (!trace_) {
            return 0;
        }
        RecoveryLevel level;
        level.dim = dim;
        trace_->levels.push_back(level);
        return trace_->levels.size() - 1;
    }

    std::optional<std::size_t> search(const AdviceTable& table, const IntMatrix& x, bool& fallback) {
        const std::size_t size = table.entries.size();
        std::vector<std::optional<double>> memo(size);
        auto probe = [&](std::size_t i) {
            if (!memo[i]) {
                memo[i] = advice_distance(table.entries[i], x, oracle_);
            }
            return *memo[i];
        };

        if (options_.mode == SearchMode::bisect) {
            // t(i) is valley-shaped with its unique zero at the wanted gadget.
            std::size_t lo = 0;
            std::size_t hi = size - 1;
            while (lo <= hi) {
                if (lo == hi) {
                    if (probe(lo) == 0.0) {
                        return lo;
                    }
                    break;
                }
                const std::size_t v = lo + (hi - lo) / 2;
                const std::size_t w = v + 1;
                const double tv = probe(v);
                if (tv == 0.0) {
                    return v;
                }
                const double tw = probe(w);
                if (tw == 0.0) {
                    return w;
                }
                if (tv < tw) {
                    if (v == lo) {
                        break;
                    }
                    hi = v - 1;
                } else {
                    if (w == hi) {
                        break;
                    }
                    lo = w + 1;
                }
            }
            fallback = true;
        }

        for (std::size_t i = 0; i < size; ++i) {
            // A memoized nonzero is final: oracles preserve zero exactly.
            if (memo[i] && *memo[i] != 0.0) {
                continue;
            }
            if (probe(i) == 0.0) {
                return i;
            }
        }
        return std::nullopt;
    }

    ApproxOracle& oracle_;
    const AdviceSet& advice_;
    RecoveryOptions options_;
    RecoveryTrace* trace_;
};

}  // namespace

double advice_distance(const AdviceEntry& entry, const IntMatrix& x, ApproxOracle& oracle) {
    const double answer = oracle.query(build_w(entry.z, x));
    return std::sqrt(answer) / std::abs(static_cast<double>(entry.alpha));
}

BigInt recover_permanent(const IntMatrix& x, ApproxOracle& oracle, const AdviceSet& advice,
                         const RecoveryOptions& options, RecoveryTrace* trace) {
    if (!x.is_sign_matrix()) {
        throw InvalidInput("recover_permanent: X has an entry outside {-1, 0, 1}");
    }
    if (trace) {
        trace->levels.clear();
    }
    return Recovery(oracle, advice, options, trace).solve(x);
}

}  // namespace permlab
