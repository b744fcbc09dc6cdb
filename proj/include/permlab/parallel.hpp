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

#ifndef PERMLAB_PARALLEL_HPP
#define PERMLAB_PARALLEL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

namespace permlab {

/// Default worker count: the hardware concurrency (at least 1), capped by
/// `PERMLAB_THREADS` when that is set to a positive integer.
unsigned worker_count();

/// Splits [0, total) into `workers` contiguous chunks and runs
/// `body(chunk_index, begin, end)` on each, one thread per chunk. Chunk
/// boundaries depend only on `total` and `workers`, so per-chunk results can be
/// reduced in chunk order deterministically. Exceptions are rethrown.
void parallel_chunks(std::uint64_t total, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body);

/// SplitMix64 finalizer; derives independent stream seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace permlab

#endif  // PERMLAB_PARALLEL_HPP
