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

#include "permlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace permlab {

unsigned worker_count() {
    const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PERMLAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) {
                return static_cast<unsigned>(std::min<long>(v, hardware));
            }
        } catch (const std::exception&) {
            // Fall through to the hardware default.
        }
    }
    return hardware;
}

void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    workers = std::max(1u, workers);
    if (total < workers) {
        workers = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
    }
    if (workers == 1) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
        threads.emplace_back([&, w, begin, end] {
            try {
                body(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace permlab
