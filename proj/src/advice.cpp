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

#include "permlab/advice.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "permlab/errors.hpp"
#include "permlab/gadgets.hpp"
#include "permlab/parallel.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

namespace {

// Enumeration index -> sign matrix; the first entry is the most significant
// base-3 digit, digit d maps to entry d - 1.
IntMatrix sign_matrix_from_index(std::uint64_t index, std::size_t k) {
    IntMatrix x(k);
    for (std::size_t p = k * k; p-- > 0;) {
        x(p / k, p % k) = static_cast<long long>(index % 3) - 1;
        index /= 3;
    }
    return x;
}

std::uint64_t pow3(std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / 3) {
            throw LimitExceeded("advice enumeration 3^" + std::to_string(e) + " overflows");
        }
        r *= 3;
    }
    return r;
}

AdviceEntry make_entry(const IntMatrix& z) {
    const std::size_t last = z.dim() - 1;
    BigInt alpha = permanent_ryser(minor(z, last, last));
    BigInt per_z = permanent_ryser(z);
    Rational ratio = make_rational(per_z, alpha);
    return {z, std::move(alpha), std::move(ratio)};
}

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt parse_integer(const std::string& token) {
    try {
        return BigInt(token);
    } catch (const std::runtime_error&) {
        throw InvalidInput("advice file has a non-integer token '" + token + "'");
    }
}

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == token.size()) {
        throw InvalidInput("advice ratio must be written p/q, got '" + token + "'");
    }
    try {
        BigInt p(token.substr(0, slash));
        BigInt q(token.substr(slash + 1));
        if (q <= 0) {
            throw InvalidInput("advice ratio has a nonpositive denominator: '" + token + "'");
        }
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw InvalidInput("advice ratio is not p/q: '" + token + "'");
    }
}

}  // namespace

AdviceTable generate_advice(std::size_t k, unsigned threads) {
    if (k < 1) {
        throw InvalidInput("generate_advice: k must be at least 1");
    }
    const std::uint64_t total = pow3(k * k);
    threads = threads == 0 ? worker_count() : threads;

    // Per chunk: ratio -> lowest enumeration index that produced it.
    std::vector<std::map<Rational, std::uint64_t>> witnesses(std::max(1u, threads));
    parallel_chunks(total, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        auto& local = witnesses[chunk];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const GadgetZ g = build_z(sign_matrix_from_index(idx, k));
            const std::size_t last = k + 1;
            const BigInt alpha = permanent_ryser(minor(g.z, last, last));
            if (alpha == 0) {
                continue;
            }
            Rational ratio = make_rational(permanent_ryser(g.z), alpha);
            local.try_emplace(std::move(ratio), idx);
        }
    });

    std::map<Rational, std::uint64_t> merged;
    for (auto& local : witnesses) {
        for (auto& [ratio, idx] : local) {
            auto [it, inserted] = merged.try_emplace(ratio, idx);
            if (!inserted && idx < it->second) {
                it->second = idx;
            }
        }
    }

    AdviceTable table{k, {}};
    table.entries.reserve(merged.size());
    for (const auto& [ratio, idx] : merged) {
        table.entries.push_back(make_entry(build_z(sign_matrix_from_index(idx, k)).z));
    }
    return table;
}

void validate_advice(const AdviceTable& table) {
    const std::size_t dim = table.size_k + 2;
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        const std::string where = "advice entry " + std::to_string(i) + " (k=" + std::to_string(table.size_k) + ")";
        if (e.z.dim() != dim) {
            throw VerificationFailure(where + ": Z must be " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        if (!e.z.is_sign_matrix()) {
            throw VerificationFailure(where + ": Z has an entry outside {-1, 0, 1}");
        }
        if (e.z(dim - 1, dim - 1) != 0) {
            throw VerificationFailure(where + ": bottom-right entry of Z is not 0");
        }
        if (e.alpha == 0 || e.alpha != permanent_ryser(minor(e.z, dim - 1, dim - 1))) {
            throw VerificationFailure(where + ": alpha is not the nonzero permanent of the leading minor");
        }
        if (e.ratio != make_rational(permanent_ryser(e.z), e.alpha)) {
            throw VerificationFailure(where + ": ratio is not Per(Z) / alpha");
        }
        if (i > 0 && !(table.entries[i - 1].ratio < e.ratio)) {
            throw VerificationFailure(where + ": ratios are not strictly ascending");
        }
    }
}

void write_advice(std::ostream& out, const AdviceTable& table) {
    out << "k " << table.size_k << " count " << table.entries.size() << '\n';
    for (const auto& e : table.entries) {
        for (const auto& v : e.z.entries()) {
            out << v << ' ';
        }
        out << e.alpha << ' ' << rational_str(e.ratio) << '\n';
    }
}

AdviceTable read_advice(std::istream& in) {
    std::string tag_k, tag_count;
    std::size_t k = 0, count = 0;
    if (!(in >> tag_k >> k >> tag_count >> count) || tag_k != "k" || tag_count != "count") {
        throw InvalidInput("advice file must start with 'k <dim> count <N>'");
    }
    if (k < 1 || k > 8) {
        throw InvalidInput("advice file has unsupported dimension k=" + std::to_string(k));
    }
    AdviceTable table{k, {}};
    const std::size_t dim = k + 2;
    for (std::size_t i = 0; i < count; ++i) {
        IntMatrix z(dim);
        std::string token;
        for (std::size_t p = 0; p < dim * dim; ++p) {
            if (!(in >> token)) {
                throw InvalidInput("advice file truncated in entry " + std::to_string(i));
            }
            z(p / dim, p % dim) = parse_integer(token);
        }
        std::string alpha, ratio;
        if (!(in >> alpha >> ratio)) {
            throw InvalidInput("advice file truncated in entry " + std::to_string(i));
        }
        table.entries.push_back({std::move(z), parse_integer(alpha), parse_rational(ratio)});
    }
    std::string extra;
    if (in >> extra) {
        throw InvalidInput("advice file has trailing data after " + std::to_string(count) + " entries");
    }
    return table;
}

std::filesystem::path default_advice_dir() {
    if (const char* env = std::getenv("PERMLAB_ADVICE_DIR"); env && *env) {
        return env;
    }
    return std::filesystem::current_path() / ".permlab-cache";
}

AdviceTable load_or_generate_advice(std::size_t k, const std::filesystem::path& dir, unsigned threads) {
    const auto path = dir / ("advice_k" + std::to_string(k) + ".txt");
    if (std::ifstream in(path); in) {
        try {
            AdviceTable table = read_advice(in);
            if (table.size_k == k) {
                validate_advice(table);
                return table;
            }
        } catch (const std::exception&) {
            // Corrupt or stale cache; regenerate below.
        }
    }
    AdviceTable table = generate_advice(k, threads);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    // Unique per process and call so concurrent writers never share a file.
    static std::atomic<unsigned> serial{0};
    const auto tmp = path.string() + "." + std::to_string(::getpid()) + "." + std::to_string(serial++) + ".tmp";
    {
        std::ofstream out(tmp);
        if (out) {
            write_advice(out, table);
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
    }
    return table;
}

AdviceSet load_advice_set(std::size_t max_k, const std::filesystem::path& dir, unsigned threads) {
    AdviceSet set;
    for (std::size_t k = 1; k <= max_k; ++k) {
        set.emplace(k, load_or_generate_advice(k, dir, threads));
    }
    return set;
}

}  // namespace permlab
