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

#ifndef PERMLAB_BOSON_HPP
#define PERMLAB_BOSON_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permlab/int_matrix.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

/// Photon counts per output mode.
struct FockState {
    std::vector<unsigned> occupations;

    std::size_t modes() const noexcept { return occupations.size(); }
    unsigned total() const noexcept;
    std::string str() const;

    bool operator==(const FockState&) const = default;
    auto operator<=>(const FockState&) const = default;
};

/// One photon in each of the first k of m modes.
FockState unit_state(std::size_t m, std::size_t k);

/// An m x k column-orthonormal matrix: the first k columns of the network
/// unitary, one per input photon.
class LinearNetwork {
   public:
    /// Throws InvalidInput if m < k, k < 1, or A^H A differs from I by more than `tol`.
    explicit LinearNetwork(ComplexMatrix a, double tol = 1e-9);

    const ComplexMatrix& matrix() const noexcept { return a_; }
    std::size_t modes() const noexcept { return static_cast<std::size_t>(a_.rows()); }
    std::size_t photons() const noexcept { return static_cast<std::size_t>(a_.cols()); }

   private:
    ComplexMatrix a_;
};

/// Max deviation of A^H A from the identity.
double orthonormality_error(const ComplexMatrix& a);

/// Haar-like random network: QR of an m x k complex Gaussian matrix.
LinearNetwork random_network(std::size_t m, std::size_t k, std::uint64_t seed);

/// Weak compositions of n into m parts in descending lexicographic order
/// ((n,0,..,0) first). Count is C(m+n-1, n).
std::vector<FockState> enumerate_states(std::size_t m, std::size_t n);

/// C(m+n-1, n) computed exactly.
BigInt state_count(std::size_t m, std::size_t n);

/// A_S: s_i copies of row i of A, rows in ascending i. Shape n x k.
ComplexMatrix state_submatrix(const LinearNetwork& net, const FockState& s);

/// |Per(A_S)|^2 / prod_i s_i!.
double outcome_probability(const LinearNetwork& net, const FockState& s);

struct BosonDistribution {
    LinearNetwork network;
    std::vector<FockState> states;
    std::vector<double> probs;
};

inline constexpr std::uint64_t kMaxEnumeratedStates = 1'000'000;

/// Probabilities of every output state. Throws LimitExceeded past kMaxEnumeratedStates.
BosonDistribution full_distribution(const LinearNetwork& net, unsigned threads = 0);

/// Inverse-CDF sampling over the enumerated states from a seeded mt19937_64.
std::vector<FockState> sample(const BosonDistribution& dist, std::uint64_t seed, std::size_t count);

/// Half the L1 distance between `dist.probs` and the empirical frequencies of `samples`.
double total_variation(const BosonDistribution& dist, const std::vector<FockState>& samples);

/// Network [eps*M; C] with C = sqrt(I - eps^2 M^T M) (principal root). The
/// probability of unit_state(2k, k) is eps^{2k} Per(M)^2.
/// Throws InvalidInput if M is not over {-1,0,1}, eps is outside (0, 1/k], or
/// I - eps^2 M^T M is not positive semidefinite within 1e-9.
LinearNetwork embed_scaled(const IntMatrix& m, double eps);

/// JSON: {"m": M, "k": K, "entries": [[[re, im], ...], ...]} row-major m x k.
LinearNetwork parse_network(const std::string& json_text);
LinearNetwork read_network_file(const std::string& path);
std::string network_to_json(const LinearNetwork& net);

}  // namespace permlab

#endif  // PERMLAB_BOSON_HPP
