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

#include "permlab/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"

namespace permlab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

BigInt to_big(i128 v) {
    bool negative = v < 0;
    u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
}

constexpr std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// Ryser with int64 row sums and 128-bit products. Valid when every product of
// row sums stays below 2^126, which permanent_bound() certifies.
BigInt ryser_int128(const std::vector<std::int64_t>& a, std::size_t n, unsigned threads) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<BigInt> partial(std::max(1u, threads));

    parallel_chunks(subsets - 1, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        // Chunk covers Gray indices k in [begin + 1, end + 1).
        std::vector<std::int64_t> row_sum(n, 0);
        std::uint64_t start_set = gray(begin);
        for (std::size_t j = 0; j < n; ++j) {
            if (start_set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] += a[i * n + j];
                }
            }
        }
        BigInt spill = 0;
        i128 acc = 0;
        for (std::uint64_t k = begin + 1; k <= end; ++k) {
            const auto j = static_cast<std::size_t>(std::countr_zero(k));
            const std::uint64_t set = gray(k);
            const std::int64_t* col = a.data() + j;
            if (set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] += col[i * n];
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] -= col[i * n];
                }
            }
            i128 prod = 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (row_sum[i] == 0) {
                    prod = 0;
                    break;
                }
                prod *= row_sum[i];
            }
            if (prod == 0) {
                continue;
            }
            if (std::popcount(set) & 1) {
                prod = -prod;
            }
            i128 next;
            if (__builtin_add_overflow(acc, prod, &next)) {
                spill += to_big(acc);
                acc = prod;
            } else {
                acc = next;
            }
        }
        spill += to_big(acc);
        partial[chunk] = std::move(spill);
    });

    BigInt total = 0;
    for (auto& p : partial) {
        total += p;
    }
    return (n & 1) ? BigInt(-total) : total;
}

// Ryser with int64 row sums and fixed-width L-limb products, for bounds that
// overflow 128 bits but stay below 2^(64 L). Products are kept as magnitudes;
// the accumulator is (L + 1)-limb two's complement.
template <std::size_t L>
BigInt ryser_wide(const std::vector<std::int64_t>& a, std::size_t n, unsigned threads) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<BigInt> partial(std::max(1u, threads));

    parallel_chunks(subsets - 1, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::int64_t> row_sum(n, 0);
        std::uint64_t start_set = gray(begin);
        for (std::size_t j = 0; j < n; ++j) {
            if (start_set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] += a[i * n + j];
                }
            }
        }
        std::uint64_t acc[L + 1] = {};
        for (std::uint64_t k = begin + 1; k <= end; ++k) {
            const auto j = static_cast<std::size_t>(std::countr_zero(k));
            const std::uint64_t set = gray(k);
            const std::int64_t* col = a.data() + j;
            if (set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] += col[i * n];
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] -= col[i * n];
                }
            }
            std::uint64_t prod[L] = {1};
            std::size_t used = 1;
            bool negative = std::popcount(set) & 1;
            bool zero = false;
            for (std::size_t i = 0; i < n; ++i) {
                const std::int64_t v = row_sum[i];
                if (v == 0) {
                    zero = true;
                    break;
                }
                negative ^= v < 0;
                const auto mag = static_cast<std::uint64_t>(v < 0 ? -v : v);
                std::uint64_t carry = 0;
                for (std::size_t w = 0; w < used; ++w) {
                    const u128 t = static_cast<u128>(prod[w]) * mag + carry;
                    prod[w] = static_cast<std::uint64_t>(t);
                    carry = static_cast<std::uint64_t>(t >> 64);
                }
                if (carry) {
                    prod[used++] = carry;
                }
            }
            if (zero) {
                continue;
            }
            if (negative) {
                // acc -= prod, via acc += ~prod + 1 over L + 1 limbs.
                std::uint64_t c = 1;
                for (std::size_t w = 0; w < L; ++w) {
                    const std::uint64_t x = w < used ? ~prod[w] : ~std::uint64_t{0};
                    const u128 t = static_cast<u128>(acc[w]) + x + c;
                    acc[w] = static_cast<std::uint64_t>(t);
                    c = static_cast<std::uint64_t>(t >> 64);
                }
                acc[L] += ~std::uint64_t{0} + c;
            } else {
                std::uint64_t c = 0;
                for (std::size_t w = 0; w < used; ++w) {
                    const u128 t = static_cast<u128>(acc[w]) + prod[w] + c;
                    acc[w] = static_cast<std::uint64_t>(t);
                    c = static_cast<std::uint64_t>(t >> 64);
                }
                for (std::size_t w = used; c && w <= L; ++w) {
                    c = ++acc[w] == 0;
                }
            }
        }
        const bool negative = acc[L] >> 63;
        if (negative) {
            unsigned char c = 1;
            for (auto& w : acc) {
                w = ~w + c;
                c = c && w == 0;
            }
        }
        BigInt value = 0;
        for (std::size_t w = L + 1; w-- > 0;) {
            value <<= 64;
            value += acc[w];
        }
        partial[chunk] = negative ? BigInt(-value) : value;
    });

    BigInt total = 0;
    for (auto& p : partial) {
        total += p;
    }
    return (n & 1) ? BigInt(-total) : total;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : kBases) {
        if (n % b == 0) {
            return n == b;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t b : kBases) {
        std::uint64_t x = pow_mod(b, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Primes descending from 2^62, generated on demand.
std::uint64_t nth_prime(std::size_t idx) {
    static std::vector<std::uint64_t> primes;
    static std::uint64_t cursor = (std::uint64_t{1} << 62) - 1;
    static std::mutex mu;
    std::lock_guard lock(mu);
    while (primes.size() <= idx) {
        while (!is_prime_u64(cursor)) {
            cursor -= 2;
        }
        primes.push_back(cursor);
        cursor -= 2;
    }
    return primes[idx];
}

std::uint64_t ryser_mod(const IntMatrix& m, std::uint64_t p, unsigned threads) {
    const std::size_t n = m.dim();
    std::vector<std::uint64_t> a(n * n);
    const BigInt pb = p;
    for (std::size_t k = 0; k < n * n; ++k) {
        BigInt r = m.entries()[k] % pb;
        if (r < 0) {
            r += pb;
        }
        a[k] = static_cast<std::uint64_t>(r);
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::uint64_t> partial(std::max(1u, threads), 0);

    parallel_chunks(subsets - 1, threads, [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> row_sum(n, 0);
        std::uint64_t start_set = gray(begin);
        for (std::size_t j = 0; j < n; ++j) {
            if (start_set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    row_sum[i] = (row_sum[i] + a[i * n + j]) % p;
                }
            }
        }
        std::uint64_t acc = 0;
        for (std::uint64_t k = begin + 1; k <= end; ++k) {
            const auto j = static_cast<std::size_t>(std::countr_zero(k));
            const std::uint64_t set = gray(k);
            if (set >> j & 1) {
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t v = row_sum[i] + a[i * n + j];
                    row_sum[i] = v >= p ? v - p : v;
                }
            } else {
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t v = a[i * n + j];
                    row_sum[i] = row_sum[i] >= v ? row_sum[i] - v : row_sum[i] + p - v;
                }
            }
            std::uint64_t prod = 1;
            for (std::size_t i = 0; i < n && prod; ++i) {
                prod = mul_mod(prod, row_sum[i], p);
            }
            if (std::popcount(set) & 1) {
                prod = prod ? p - prod : 0;
            }
            acc += prod;
            if (acc >= p) {
                acc -= p;
            }
        }
        partial[chunk] = acc;
    });

    std::uint64_t total = 0;
    for (std::uint64_t v : partial) {
        total = (total + v) % p;
    }
    if ((n & 1) && total) {
        total = p - total;
    }
    return total;
}

BigInt ryser_multimodular(const IntMatrix& m, unsigned threads) {
    // Need modulus > 2 * bound so the symmetric residue is the true value.
    const BigInt limit = 2 * permanent_bound(m);
    BigInt modulus = 1;
    BigInt value = 0;
    for (std::size_t idx = 0; modulus <= limit; ++idx) {
        const std::uint64_t p = nth_prime(idx);
        const std::uint64_t r = ryser_mod(m, p, threads);
        // Garner step: value += modulus * ((r - value) * modulus^{-1} mod p).
        const BigInt pb = p;
        BigInt diff = (BigInt(r) - value) % pb;
        if (diff < 0) {
            diff += pb;
        }
        const auto mod_p = static_cast<std::uint64_t>(modulus % pb);
        const std::uint64_t inv = pow_mod(mod_p, p - 2, p);
        const std::uint64_t t = mul_mod(static_cast<std::uint64_t>(diff), inv, p);
        value += modulus * t;
        modulus *= pb;
    }
    if (2 * value > modulus) {
        value -= modulus;
    }
    return value;
}

}  // namespace

BigInt permanent_naive(const IntMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    BigInt total = 0;
    do {
        BigInt prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) {
            prod *= m(i, sigma[i]);
        }
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

BigInt permanent_bound(const IntMatrix& m) {
    BigInt bound = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row += abs(m(i, j));
        }
        bound *= row;
    }
    return bound;
}

BigInt permanent_ryser(const IntMatrix& m, const RyserOptions& options) {
    const std::size_t n = m.dim();
    if (n == 0) {
        return 1;
    }
    if (n >= 63) {
        throw LimitExceeded("permanent_ryser: dimension " + std::to_string(n) + " exceeds 62");
    }
    unsigned threads = options.threads == 0 ? worker_count() : options.threads;
    // Small subset loops are not worth a thread.
    if (n < 16) {
        threads = 1;
    }

    const BigInt bound = permanent_bound(m);
    if (bound == 0) {
        return 0;
    }
    static const BigInt kProductLimit = BigInt(1) << 126;
    static const BigInt kRowLimit = BigInt(1) << 62;
    // Row sums must fit in int64; products get 128-bit or multi-limb words.
    static const BigInt kWideLimit = BigInt(1) << 511;
    bool fits = options.arithmetic == RyserArithmetic::automatic && bound < kWideLimit;
    if (fits) {
        for (std::size_t i = 0; i < n && fits; ++i) {
            BigInt row = 0;
            for (std::size_t j = 0; j < n; ++j) {
                row += abs(m(i, j));
            }
            fits = row < kRowLimit;
        }
    }
    if (!fits) {
        return ryser_multimodular(m, threads);
    }
    std::vector<std::int64_t> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
        a[k] = static_cast<std::int64_t>(m.entries()[k]);
    }
    if (bound < kProductLimit) {
        return ryser_int128(a, n, threads);
    }
    switch ((msb(bound) + 64) / 64) {
        case 2:
        case 3:
            return ryser_wide<3>(a, n, threads);
        case 4:
            return ryser_wide<4>(a, n, threads);
        case 5:
        case 6:
            return ryser_wide<6>(a, n, threads);
        default:
            return ryser_wide<8>(a, n, threads);
    }
}

std::complex<double> permanent_complex(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw InvalidInput("permanent_complex: matrix is " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected square");
    }
    const auto n = static_cast<std::size_t>(m.rows());
    if (n == 0) {
        return {1.0, 0.0};
    }
    if (n >= 40) {
        throw LimitExceeded("permanent_complex: dimension " + std::to_string(n) + " too large");
    }
    std::vector<std::complex<double>> row_sum(n, 0.0);
    std::complex<double> acc = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto j = static_cast<Eigen::Index>(std::countr_zero(k));
        const std::uint64_t set = gray(k);
        if (set >> j & 1) {
            for (std::size_t i = 0; i < n; ++i) {
                row_sum[i] += m(static_cast<Eigen::Index>(i), j);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                row_sum[i] -= m(static_cast<Eigen::Index>(i), j);
            }
        }
        std::complex<double> prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= row_sum[i];
        }
        acc += (std::popcount(set) & 1) ? -prod : prod;
    }
    return (n & 1) ? -acc : acc;
}

}  // namespace permlab
