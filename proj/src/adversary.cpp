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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"

namespace permlab {

namespace {

std::uint64_t domain_size(unsigned n) {
    if (n < 1 || n > kMaxTableBits) {
        throw InvalidInput("input width must be in [1, " + std::to_string(kMaxTableBits) + "], got " +
                           std::to_string(n));
    }
    return std::uint64_t{1} << n;
}

// Values of {0,1}^n not answered in the transcript, in random order.
std::vector<std::uint64_t> fresh_values(const QueryTranscript& transcript, std::mt19937_64& rng) {
    std::vector<std::uint64_t> free;
    const std::uint64_t size = std::uint64_t{1} << transcript.bits();
    for (std::uint64_t y = 0; y < size; ++y) {
        if (!transcript.answer_used(y)) {
            free.push_back(y);
        }
    }
    std::shuffle(free.begin(), free.end(), rng);
    return free;
}

}  // namespace

QueryTranscript::QueryTranscript(unsigned n) : n_(n) { domain_size(n); }

std::optional<std::uint64_t> QueryTranscript::answer_for(std::uint64_t x) const {
    for (const auto& [qx, qy] : pairs_) {
        if (qx == x) {
            return qy;
        }
    }
    return std::nullopt;
}

void QueryTranscript::record(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t size = std::uint64_t{1} << n_;
    if (x >= size || y >= size) {
        throw InvalidInput("transcript entry (" + std::to_string(x) + ", " + std::to_string(y) +
                           ") does not fit in " + std::to_string(n_) + " bits");
    }
    if (inputs_.contains(x)) {
        throw InvalidInput("input " + std::to_string(x) + " already queried");
    }
    if (answers_.contains(y)) {
        throw InvalidInput("answer " + std::to_string(y) + " already used; transcript must stay injective");
    }
    pairs_.emplace_back(x, y);
    inputs_.insert(x);
    answers_.insert(y);
}

std::uint64_t lazy_query(QueryTranscript& transcript, std::uint64_t x, std::uint64_t seed) {
    if (auto known = transcript.answer_for(x)) {
        return *known;
    }
    const std::uint64_t size = std::uint64_t{1} << transcript.bits();
    if (x >= size) {
        throw InvalidInput("query " + std::to_string(x) + " does not fit in " + std::to_string(transcript.bits()) +
                           " bits");
    }
    std::mt19937_64 rng(mix_seed(mix_seed(seed, transcript.size()), x));
    std::uniform_int_distribution<std::uint64_t> pick(0, size - 1);
    std::uint64_t y = pick(rng);
    while (transcript.answer_used(y)) {
        y = pick(rng);
    }
    transcript.record(x, y);
    return y;
}

std::set<std::uint64_t> restricted_masks(const QueryTranscript& transcript) {
    std::set<std::uint64_t> masks;
    const auto& pairs = transcript.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            masks.insert(pairs[i].first ^ pairs[j].first);
        }
    }
    return masks;
}

FunctionTable commit_simon(const QueryTranscript& transcript, std::uint64_t seed) {
    const unsigned n = transcript.bits();
    const std::uint64_t size = std::uint64_t{1} << n;
    const std::uint64_t l = transcript.size();
    if (size - 1 <= l * (l - 1) / 2) {
        throw InvalidInput("commit_simon: 2^n - 1 = " + std::to_string(size - 1) + " does not exceed l(l-1)/2 = " +
                           std::to_string(l * (l - 1) / 2));
    }
    const auto restricted = restricted_masks(transcript);
    std::vector<std::uint64_t> admissible;
    for (std::uint64_t s = 1; s < size; ++s) {
        if (!restricted.contains(s)) {
            admissible.push_back(s);
        }
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t mask = admissible[std::uniform_int_distribution<std::size_t>(0, admissible.size() - 1)(rng)];

    std::vector<std::uint64_t> out(size);
    std::vector<bool> assigned(size, false);
    for (const auto& [x, y] : transcript.pairs()) {
        out[x] = out[x ^ mask] = y;
        assigned[x] = assigned[x ^ mask] = true;
    }
    const auto free = fresh_values(transcript, rng);
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (!assigned[x]) {
            out[x] = out[x ^ mask] = free[next++];
            assigned[x] = assigned[x ^ mask] = true;
        }
    }
    return FunctionTable::simon(n, mask, std::move(out));
}

FunctionTable commit_injective(const QueryTranscript& transcript, std::uint64_t seed) {
    const unsigned n = transcript.bits();
    const std::uint64_t size = std::uint64_t{1} << n;
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out(size);
    std::vector<bool> assigned(size, false);
    for (const auto& [x, y] : transcript.pairs()) {
        out[x] = y;
        assigned[x] = true;
    }
    const auto free = fresh_values(transcript, rng);
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        if (!assigned[x]) {
            out[x] = free[next++];
        }
    }
    return FunctionTable::injective(n, std::move(out));
}

Rational collision_probability(unsigned n, std::uint64_t l) {
    if (l == 0) {
        throw InvalidInput("collision_probability: needs at least one query");
    }
    const BigInt lb = l;
    const BigInt denom = (BigInt(1) << n) - 1 - lb * (lb - 1) / 2;
    if (denom <= 0) {
        throw InvalidInput("collision_probability: 2^n - 1 - l(l-1)/2 = " + denom.str() +
                           " is not positive; the bound is vacuous");
    }
    return make_rational(lb - 1, denom);
}

ExperimentResult run_distinguishing_experiment(unsigned n, std::uint64_t l, std::uint64_t trials, std::uint64_t seed,
                                               unsigned threads) {
    const std::uint64_t size = domain_size(n);
    if (l > size) {
        throw InvalidInput("cannot make " + std::to_string(l) + " distinct queries in a domain of " +
                           std::to_string(size));
    }
    if (trials == 0) {
        throw InvalidInput("run_distinguishing_experiment: trials must be positive");
    }
    threads = threads == 0 ? worker_count() : threads;
    std::vector<std::uint64_t> hits(threads, 0);
    parallel_chunks(trials, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> domain(size);
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t t = begin; t < end; ++t) {
            std::mt19937_64 rng(mix_seed(seed, t));
            const FunctionTable f = random_simon(n, rng);
            // Partial Fisher-Yates: the first l slots are a uniform l-subset.
            std::iota(domain.begin(), domain.end(), 0);
            seen.clear();
            bool collided = false;
            for (std::uint64_t q = 0; q < l && !collided; ++q) {
                const auto j = std::uniform_int_distribution<std::uint64_t>(q, size - 1)(rng);
                std::swap(domain[q], domain[j]);
                collided = !seen.insert(f(domain[q])).second;
            }
            hits[chunk] += collided ? 1 : 0;
        }
    });
    ExperimentResult r;
    r.trials = trials;
    r.collisions = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    r.rate = static_cast<double>(r.collisions) / static_cast<double>(trials);
    r.standard_error = std::sqrt(r.rate * (1.0 - r.rate) / static_cast<double>(trials));
    return r;
}

}  // namespace permlab
