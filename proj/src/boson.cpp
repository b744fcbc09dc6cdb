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

#include "permlab/boson.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "permlab/errors.hpp"
#include "permlab/parallel.hpp"

namespace permlab {

unsigned FockState::total() const noexcept {
    unsigned t = 0;
    for (unsigned s : occupations) {
        t += s;
    }
    return t;
}

std::string FockState::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < occupations.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(occupations[i]);
    }
    return out + ")";
}

FockState unit_state(std::size_t m, std::size_t k) {
    if (k > m) {
        throw InvalidInput("unit_state: more photons than modes");
    }
    FockState s{std::vector<unsigned>(m, 0)};
    std::fill_n(s.occupations.begin(), k, 1u);
    return s;
}

double orthonormality_error(const ComplexMatrix& a) {
    const ComplexMatrix gram = a.adjoint() * a;
    const ComplexMatrix eye = ComplexMatrix::Identity(gram.rows(), gram.cols());
    return (gram - eye).cwiseAbs().maxCoeff();
}

LinearNetwork::LinearNetwork(ComplexMatrix a, double tol) : a_(std::move(a)) {
    if (a_.cols() < 1) {
        throw InvalidInput("network must have at least one input column");
    }
    if (a_.rows() < a_.cols()) {
        throw InvalidInput("network needs m >= k, got m=" + std::to_string(a_.rows()) +
                           " k=" + std::to_string(a_.cols()));
    }
    const double err = orthonormality_error(a_);
    if (!(err <= tol)) {
        throw InvalidInput("network columns are not orthonormal (max |A^H A - I| = " +
                           std::to_string(err) + ")");
    }
}

LinearNetwork random_network(std::size_t m, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            g(i, j) = {gauss(rng), gauss(rng)};
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(g.rows(), g.cols());
    return LinearNetwork(std::move(q));
}

BigInt state_count(std::size_t m, std::size_t n) {
    if (m == 0) {
        return n == 0 ? 1 : 0;
    }
    // C(m+n-1, n), built incrementally so each intermediate is an integer.
    BigInt c = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        c = c * (m - 1 + i) / i;
    }
    return c;
}

std::vector<FockState> enumerate_states(std::size_t m, std::size_t n) {
    if (m < 1) {
        throw InvalidInput("enumerate_states: need at least one mode");
    }
    if (state_count(m, n) > kMaxEnumeratedStates) {
        throw LimitExceeded("enumerate_states: C(m+n-1, n) exceeds " +
                            std::to_string(kMaxEnumeratedStates));
    }
    std::vector<FockState> out;
    std::vector<unsigned> occ(m, 0);
    occ[0] = static_cast<unsigned>(n);
    while (true) {
        out.push_back(FockState{occ});
        // Successor in descending lexicographic order: take one photon from the
        // rightmost nonempty mode before the last and gather it with
        // everything to its right into the next mode.
        std::size_t i = m - 1;
        while (i > 0 && occ[i - 1] == 0) {
            --i;
        }
        if (i == 0) {
            break;
        }
        const std::size_t pivot = i - 1;
        unsigned tail = 0;
        for (std::size_t j = pivot + 1; j < m; ++j) {
            tail += occ[j];
            occ[j] = 0;
        }
        --occ[pivot];
        occ[pivot + 1] = tail + 1;
    }
    return out;
}

ComplexMatrix state_submatrix(const LinearNetwork& net, const FockState& s) {
    if (s.modes() != net.modes()) {
        throw InvalidInput("state has " + std::to_string(s.modes()) + " modes, network has " +
                           std::to_string(net.modes()));
    }
    if (s.total() != net.photons()) {
        throw InvalidInput("state holds " + std::to_string(s.total()) + " photons, network has " +
                           std::to_string(net.photons()));
    }
    const auto k = static_cast<Eigen::Index>(net.photons());
    ComplexMatrix out(k, k);
    Eigen::Index row = 0;
    for (std::size_t i = 0; i < s.modes(); ++i) {
        for (unsigned c = 0; c < s.occupations[i]; ++c) {
            out.row(row++) = net.matrix().row(static_cast<Eigen::Index>(i));
        }
    }
    return out;
}

double outcome_probability(const LinearNetwork& net, const FockState& s) {
    const ComplexMatrix sub = state_submatrix(net, s);
    BigInt denom = 1;
    for (unsigned occ : s.occupations) {
        for (unsigned f = 2; f <= occ; ++f) {
            denom *= f;
        }
    }
    return std::norm(permanent_complex(sub)) / static_cast<double>(denom);
}

BosonDistribution full_distribution(const LinearNetwork& net, unsigned threads) {
    BosonDistribution dist{net, enumerate_states(net.modes(), net.photons()), {}};
    dist.probs.assign(dist.states.size(), 0.0);
    threads = threads == 0 ? worker_count() : threads;
    parallel_chunks(dist.states.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            dist.probs[i] = outcome_probability(net, dist.states[i]);
        }
    });
    return dist;
}

std::vector<FockState> sample(const BosonDistribution& dist, std::uint64_t seed, std::size_t count) {
    std::vector<double> cdf(dist.probs.size());
    double run = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        run += dist.probs[i];
        cdf[i] = run;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, run);
    std::vector<FockState> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const double u = uni(rng);
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // upper_bound never lands on a zero-probability state: its CDF value
        // equals its predecessor's.
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        out.push_back(dist.states[idx]);
    }
    return out;
}

double total_variation(const BosonDistribution& dist, const std::vector<FockState>& samples) {
    std::vector<double> freq(dist.states.size(), 0.0);
    for (const auto& s : samples) {
        auto it = std::lower_bound(dist.states.begin(), dist.states.end(), s, std::greater<>());
        if (it == dist.states.end() || *it != s) {
            throw InvalidInput("sample " + s.str() + " is not a state of the distribution");
        }
        freq[static_cast<std::size_t>(it - dist.states.begin())] += 1.0;
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < freq.size(); ++i) {
        tv += std::abs(freq[i] / static_cast<double>(samples.size()) - dist.probs[i]);
    }
    return tv / 2.0;
}

LinearNetwork embed_scaled(const IntMatrix& m, double eps) {
    const std::size_t k = m.dim();
    if (k == 0) {
        throw InvalidInput("embed_scaled: M must be nonempty");
    }
    if (!m.is_sign_matrix()) {
        throw InvalidInput("embed_scaled: M has an entry outside {-1, 0, 1}");
    }
    if (!(eps > 0.0) || eps > 1.0 / static_cast<double>(k) * (1.0 + 1e-12)) {
        throw InvalidInput("embed_scaled: eps must lie in (0, 1/k]");
    }
    const auto kk = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd scaled(kk, kk);
    for (Eigen::Index i = 0; i < kk; ++i) {
        for (Eigen::Index j = 0; j < kk; ++j) {
            scaled(i, j) = eps * static_cast<double>(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        }
    }
    const Eigen::MatrixXd residual = Eigen::MatrixXd::Identity(kk, kk) - scaled.transpose() * scaled;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(residual);
    Eigen::VectorXd lambda = eig.eigenvalues();
    if (lambda.minCoeff() < -1e-9) {
        throw InvalidInput("embed_scaled: I - eps^2 M^T M is not positive semidefinite");
    }
    lambda = lambda.cwiseMax(0.0).cwiseSqrt();
    const Eigen::MatrixXd root = eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();

    ComplexMatrix a(2 * kk, kk);
    a.topRows(kk) = scaled.cast<std::complex<double>>();
    a.bottomRows(kk) = root.cast<std::complex<double>>();
    return LinearNetwork(std::move(a));
}

LinearNetwork parse_network(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed network JSON: ") + e.what());
    }
    try {
        const auto m = doc.at("m").get<std::size_t>();
        const auto k = doc.at("k").get<std::size_t>();
        const auto& rows = doc.at("entries");
        if (!rows.is_array() || rows.size() != m) {
            throw InvalidInput("network entries must hold m rows");
        }
        ComplexMatrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < m; ++i) {
            if (!rows[i].is_array() || rows[i].size() != k) {
                throw InvalidInput("network row " + std::to_string(i) + " must hold k entries");
            }
            for (std::size_t j = 0; j < k; ++j) {
                const auto& z = rows[i][j];
                if (!z.is_array() || z.size() != 2) {
                    throw InvalidInput("network entries must be [re, im] pairs");
                }
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {z[0].get<double>(),
                                                                                  z[1].get<double>()};
            }
        }
        return LinearNetwork(std::move(a));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed network JSON: ") + e.what());
    }
}

LinearNetwork read_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open network file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

std::string network_to_json(const LinearNetwork& net) {
    nlohmann::json doc;
    doc["m"] = net.modes();
    doc["k"] = net.photons();
    auto rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < net.matrix().rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < net.matrix().cols(); ++j) {
            const auto z = net.matrix()(i, j);
            row.push_back({z.real(), z.imag()});
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

}  // namespace permlab
