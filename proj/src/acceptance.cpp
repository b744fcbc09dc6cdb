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

#include "permlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "permlab/adversary.hpp"
#include "permlab/advice.hpp"
#include "permlab/algorithms.hpp"
#include "permlab/boson.hpp"
#include "permlab/errors.hpp"
#include "permlab/gadgets.hpp"
#include "permlab/oracle.hpp"
#include "permlab/parallel.hpp"
#include "permlab/permanent.hpp"
#include "permlab/qsim.hpp"
#include "permlab/recovery.hpp"

namespace permlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v, int digits = 4) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

/// Collects the first failing check; later checks still count.
class Checks {
   public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++count_;
        if (!ok && first_failure_.empty()) {
            first_failure_ = what();
        }
        failures_ += ok ? 0 : 1;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::string s = std::to_string(count_ - failures_) + "/" + std::to_string(count_) + " checks";
        if (!first_failure_.empty()) {
            s += "; first failure: " + first_failure_;
        }
        return s;
    }

   private:
    std::size_t count_ = 0;
    std::size_t failures_ = 0;
    std::string first_failure_;
};

std::vector<IntMatrix> all_sign_matrices(std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k * k; ++i) {
        total *= 3;
    }
    std::vector<IntMatrix> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        IntMatrix x(k);
        std::size_t v = idx;
        for (std::size_t p = 0; p < k * k; ++p) {
            x(p / k, p % k) = static_cast<long long>(v % 3) - 1;
            v /= 3;
        }
        out.push_back(std::move(x));
    }
    return out;
}

IntMatrix random_matrix(std::size_t n, long long lo, long long hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> pick(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = pick(rng);
        }
    }
    return m;
}

IntMatrix drop_last(const IntMatrix& m) { return minor(m, m.dim() - 1, m.dim() - 1); }

/// The 81 2x2 inputs plus 250 random 3x3 and 250 random 4x4 sign matrices.
std::vector<IntMatrix> gadget_inputs(std::uint64_t seed) {
    std::vector<IntMatrix> xs = all_sign_matrices(2);
    std::mt19937_64 rng(mix_seed(seed, 1));
    for (int i = 0; i < 500; ++i) {
        xs.push_back(random_matrix(3 + i % 2, -1, 1, rng));
    }
    return xs;
}

CriterionReport gadget_identities(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    std::mt19937_64 rng(mix_seed(opt.seed, 2));
    for (const IntMatrix& x : gadget_inputs(opt.seed)) {
        const IntMatrix z = build_z(x).z;
        const BigInt per_x = permanent_ryser(x);
        const BigInt per_x11 = permanent_ryser(minor(x, 0, 0));
        checks.expect(permanent_ryser(z) == -per_x, [&] { return "Per(Z) != -Per(X) for X=" + x.str(); });
        checks.expect(permanent_ryser(drop_last(z)) == per_x11,
                      [&] { return "Per(Z^{m,m}) != Per(X^{1,1}) for X=" + x.str(); });
        // Independent Z with a zero corner for the W identity.
        IntMatrix zr = random_matrix(2 + rng() % 4, -1, 1, rng);
        zr(zr.dim() - 1, zr.dim() - 1) = 0;
        const BigInt lhs = permanent_ryser(build_w(zr, x));
        const BigInt rhs = permanent_ryser(zr) * per_x11 + permanent_ryser(drop_last(zr)) * per_x;
        checks.expect(lhs == rhs, [&] { return "W identity fails for Z=" + zr.str() + " X=" + x.str(); });
    }
    const double t = seconds_since(start);
    checks.expect(t < 10.0, [&] { return "runtime " + fmt(t) + " s >= 10 s"; });
    return {1, "gadget identities", checks.ok(), checks.summary(), t};
}

CriterionReport self_cancellation(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    for (const IntMatrix& x : gadget_inputs(opt.seed)) {
        const BigInt per = permanent_ryser(build_w(build_z(x).z, x));
        checks.expect(per == 0, [&] { return "Per(W(Z(X), X)) = " + per.str() + " for X=" + x.str(); });
    }
    return {2, "self-cancellation", checks.ok(), checks.summary(), seconds_since(start)};
}

CriterionReport engine_equivalence(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    for (const IntMatrix& x : all_sign_matrices(3)) {
        checks.expect(permanent_ryser(x) == permanent_naive(x), [&] { return "3x3 mismatch at " + x.str(); });
    }
    std::mt19937_64 rng(mix_seed(opt.seed, 3));
    for (int i = 0; i < 500; ++i) {
        const IntMatrix m = random_matrix(1 + i % 8, -50, 50, rng);
        checks.expect(permanent_ryser(m) == permanent_naive(m), [&] { return "random mismatch at " + m.str(); });
    }
    const double t = seconds_since(start);
    checks.expect(t < 30.0, [&] { return "runtime " + fmt(t) + " s >= 30 s"; });
    return {3, "engine equivalence", checks.ok(), checks.summary(), t};
}

CriterionReport oracle_recovery(const AcceptanceOptions& opt) {
    Checks checks;
    const AdviceSet advice = load_advice_set(3, opt.advice_dir, opt.threads);

    const auto start = Clock::now();
    std::vector<IntMatrix> inputs = all_sign_matrices(2);
    std::mt19937_64 rng(mix_seed(opt.seed, 4));
    for (int i = 0; i < 200; ++i) {
        inputs.push_back(random_matrix(3, -1, 1, rng));
    }
    auto exact = make_exact_oracle();
    std::size_t queries = 0;
    for (const IntMatrix& x : inputs) {
        const BigInt expected = permanent_naive(x);
        exact->reset_query_count();
        const BigInt got = recover_permanent(x, *exact, advice);
        queries += exact->query_count();
        checks.expect(got == expected, [&] { return "exact oracle: " + got.str() + " != " + expected.str(); });
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto noisy = make_noisy_oracle(1.05, mix_seed(opt.seed, 100 + s));
            const BigInt n = recover_permanent(x, *noisy, advice);
            checks.expect(n == expected, [&] { return "noisy oracle seed " + std::to_string(s) + " on " + x.str(); });
        }
    }
    const double t_recover = seconds_since(start);
    checks.expect(t_recover < 60.0, [&] { return "recovery " + fmt(t_recover) + " s >= 60 s"; });

    const auto gen_start = Clock::now();
    const AdviceTable fresh = generate_advice(3, opt.threads);
    const double t_gen = seconds_since(gen_start);
    checks.expect(fresh == advice.at(3), [] { return "regenerated k=3 table differs from the cached one"; });
    checks.expect(t_gen < 60.0, [&] { return "advice generation " + fmt(t_gen) + " s >= 60 s"; });

    return {4,
            "oracle-to-exact recovery",
            checks.ok(),
            checks.summary() + "; " + std::to_string(inputs.size()) + " inputs, mean exact queries " +
                fmt(static_cast<double>(queries) / static_cast<double>(inputs.size())) + ", recovery " +
                fmt(t_recover) + " s, k=3 advice generation " + fmt(t_gen) + " s",
            t_recover + t_gen};
}

CriterionReport boson_normalization(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    double worst_sum = 0.0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t k = 1 + i % 3;
        const std::size_t m = k + (i / 3) % (6 - k);
        const auto dist = full_distribution(random_network(m, k, mix_seed(opt.seed, 500 + i)), opt.threads);
        const double total = std::accumulate(dist.probs.begin(), dist.probs.end(), 0.0);
        worst_sum = std::max(worst_sum, std::abs(total - 1.0));
        checks.expect(std::abs(total - 1.0) <= 1e-9,
                      [&] { return "sum " + fmt(total, 15) + " for m=" + std::to_string(m) + " k=" + std::to_string(k); });
    }
    double worst_embed = 0.0;
    for (const IntMatrix& x : all_sign_matrices(2)) {
        const LinearNetwork net = embed_scaled(x, 0.5);
        const double per = static_cast<double>(permanent_naive(x));
        const double err = std::abs(outcome_probability(net, unit_state(4, 2)) - per * per / 16.0);
        worst_embed = std::max(worst_embed, err);
        checks.expect(err <= 1e-9, [&] { return "embedding error " + fmt(err) + " for M=" + x.str(); });
    }
    return {5, "boson normalization and embedding", checks.ok(),
            checks.summary() + "; max |sum-1| " + fmt(worst_sum) + ", max embedding error " + fmt(worst_embed),
            seconds_since(start)};
}

CriterionReport sampling_fidelity(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    const auto dist = full_distribution(random_network(3, 2, mix_seed(opt.seed, 6)), opt.threads);
    const double tv = total_variation(dist, sample(dist, mix_seed(opt.seed, 7), 100000));
    return {6, "sampling fidelity", tv < 0.02, "TV distance " + fmt(tv) + " over 100000 samples (m=3, k=2)",
            seconds_since(start)};
}

CriterionReport swap_test_check(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    std::mt19937_64 rng(mix_seed(opt.seed, 8));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const unsigned q = 1 + i % 4;
        const StateVector a = random_state(q, rng);
        const StateVector b = random_state(q, rng);
        const double expected = (1.0 + std::norm(a.inner(b))) / 2.0;
        const double err = std::abs(swap_test(a, b).accept_probability - expected);
        worst = std::max(worst, err);
        checks.expect(err <= 1e-9, [&] { return "random pair error " + fmt(err); });
    }
    const StateVector zero(1);
    const StateVector one = StateVector::basis(1, 1);
    const StateVector plus = run(Circuit(1).h(0), StateVector(1));
    const std::pair<const StateVector*, double> anchors[] = {{&zero, 1.0}, {&one, 0.5}, {&plus, 0.75}};
    for (const auto& [phi, want] : anchors) {
        const double got = swap_test(zero, *phi).accept_probability;
        checks.expect(std::abs(got - want) <= 1e-9, [&] { return "anchor " + fmt(want) + " got " + fmt(got, 15); });
    }
    return {7, "SWAP test", checks.ok(), checks.summary() + "; max error " + fmt(worst), seconds_since(start)};
}

CriterionReport simon_check(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    std::string counts;
    double t16 = 0.0;
    for (unsigned n : {4u, 6u, 8u}) {
        std::mt19937_64 rng(mix_seed(opt.seed, 900 + n));
        unsigned correct = 0;
        const auto n_start = Clock::now();
        for (int i = 0; i < 100; ++i) {
            const bool simon = i % 2 == 0;
            const FunctionTable f = simon ? random_simon(n, rng) : random_injective(n, rng);
            try {
                const SimonResult r = simon_decide(f, rng());
                const bool said_simon = r.decision == SimonResult::Decision::simon;
                correct += said_simon == simon && (!simon || r.mask == f.mask) ? 1 : 0;
                if (simon) {
                    for (std::uint64_t y : r.measurements) {
                        checks.expect(dot2(y, f.mask) == 0, [&] { return "measured y with y.s = 1, n=" + std::to_string(n); });
                    }
                }
            } catch (const RoundsExhausted&) {
                // Counted as an incorrect decision.
            }
        }
        if (n == 8) {
            t16 = seconds_since(n_start);
        }
        checks.expect(correct >= 99, [&] { return "n=" + std::to_string(n) + ": " + std::to_string(correct) + "/100 correct"; });
        counts += (counts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(correct) + "/100";
    }
    checks.expect(t16 < 5.0, [&] { return "16-qubit rounds took " + fmt(t16) + " s"; });
    return {8, "Simon decisions", checks.ok(), checks.summary() + "; " + counts + "; 16-qubit total " + fmt(t16) + " s",
            seconds_since(start)};
}

/// 1 - C(N/2, l) 2^l / C(N, l): some pair among l distinct inputs of a
/// 2-to-1 function on N = 2^n points shares an output.
Rational pair_collision_probability(unsigned n, std::uint64_t l) {
    const std::uint64_t big_n = std::uint64_t{1} << n;
    BigInt good = 1;  // ordered l-tuples with distinct outputs
    BigInt all = 1;   // ordered l-tuples of distinct inputs
    for (std::uint64_t i = 0; i < l; ++i) {
        good *= big_n - 2 * i;
        all *= big_n - i;
    }
    return 1 - make_rational(good, all);
}

CriterionReport adversary_check(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Checks checks;
    std::mt19937_64 rng(mix_seed(opt.seed, 10));
    std::uniform_int_distribution<std::uint64_t> input(0, 255);
    for (int i = 0; i < 10000; ++i) {
        QueryTranscript t(8);
        while (t.size() < 10) {
            lazy_query(t, input(rng), rng());
        }
        const FunctionTable f = commit_simon(t, rng());
        const auto restricted = restricted_masks(t);
        checks.expect(!restricted.contains(f.mask), [&] { return "mask " + std::to_string(f.mask) + " is restricted"; });
        bool consistent = true;
        for (const auto& [x, y] : t.pairs()) {
            consistent = consistent && f(x) == y;
        }
        for (std::uint64_t x = 0; x < 256; ++x) {
            consistent = consistent && f(x) == f(x ^ f.mask);
        }
        checks.expect(consistent, [&] { return "committed table contradicts transcript " + std::to_string(i); });
    }
    const Rational p32 = collision_probability(3, 2);
    checks.expect(p32 == make_rational(1, 6), [&] { return "collision_probability(3,2) = " + p32.str(); });

    const double truth = static_cast<double>(pair_collision_probability(8, 10));
    const ExperimentResult r = run_distinguishing_experiment(8, 10, 100000, mix_seed(opt.seed, 11), opt.threads);
    const double z = std::abs(r.rate - truth) / r.standard_error;
    checks.expect(z <= 5.0, [&] { return "empirical rate " + fmt(r.rate) + " is " + fmt(z) + " sigma from " + fmt(truth); });
    return {9, "adversary", checks.ok(),
            checks.summary() + "; rate " + fmt(r.rate, 6) + " vs pair-count " + fmt(truth, 6) + " (" + fmt(z, 3) + " sigma)",
            seconds_since(start)};
}

CriterionReport simquery_check(const AcceptanceOptions&) {
    const auto start = Clock::now();
    Checks checks;
    for (int combo = 0; combo < 4; ++combo) {
        const bool l_accepts = combo & 1;
        const bool lc_accepts = combo & 2;
        const Circuit sq = build_simquery(toy_decider(1, 1, {l_accepts, l_accepts}, 0),
                                          toy_decider(1, 1, {lc_accepts, lc_accepts}, 0));
        const unsigned out = *sq.output_qubit;
        const unsigned t = out / 2;
        for (std::uint64_t x = 0; x < 2; ++x) {
            const std::uint64_t in = x | x << t;
            const std::uint64_t want = in | std::uint64_t{l_accepts && !lc_accepts} << out;
            const StateVector s = run(sq, StateVector::basis(sq.num_qubits(), in));
            // Exact restoration: every amplitude other than `want` is zero.
            double stray = 0.0;
            for (std::uint64_t b = 0; b < s.size(); ++b) {
                stray += b == want ? 0.0 : s.probability(b);
            }
            checks.expect(std::abs(s.probability(want) - 1.0) <= 1e-12 && stray <= 1e-12,
                          [&] { return "combo " + std::to_string(combo) + " x=" + std::to_string(x); });
        }
    }
    // Per-circuit error 1/128 <= 0.01; L = {0}, complement = {1}.
    const Circuit sq = build_simquery(toy_decider(1, 7, {true, false}, 1), toy_decider(1, 7, {false, true}, 1));
    const double flip = run(sq, StateVector(sq.num_qubits())).probability_one(*sq.output_qubit);
    checks.expect(flip >= 0.98, [&] { return "noisy flip probability " + fmt(flip); });
    return {10, "SimQuery", checks.ok(), checks.summary() + "; noisy flip probability " + fmt(flip, 6),
            seconds_since(start)};
}

CriterionReport performance(const AcceptanceOptions& opt) {
    Checks checks;
    std::mt19937_64 rng(mix_seed(opt.seed, 12));
    const IntMatrix m = random_matrix(24, -10, 10, rng);
    const auto start = Clock::now();
    permanent_ryser(m, {1});
    const double t_perm = seconds_since(start);
    checks.expect(t_perm < 5.0, [&] { return "24x24 permanent took " + fmt(t_perm) + " s"; });

    // Best of five: a single k=3 run is only tens of milliseconds.
    auto time_advice = [](unsigned workers) {
        double best = 1e300;
        for (int rep = 0; rep < 5; ++rep) {
            const auto s = Clock::now();
            generate_advice(3, workers);
            best = std::min(best, seconds_since(s));
        }
        return best;
    };
    const double t1 = time_advice(1);
    const double t4 = time_advice(4);
    const double speedup = t1 / t4;
    const unsigned cores = std::thread::hardware_concurrency();
    checks.expect(speedup >= 2.0, [&] {
        return "k=3 advice speedup " + fmt(speedup, 3) + "x from 1 to 4 workers (" + std::to_string(cores) +
               " hardware threads)";
    });
    return {11, "performance", checks.ok(),
            checks.summary() + "; 24x24 permanent " + fmt(t_perm) + " s; advice k=3 " + fmt(t1) + " s (1 worker) vs " +
                fmt(t4) + " s (4 workers), " + std::to_string(cores) + " hardware threads",
            t_perm + t1 + t4};
}

}  // namespace

CriterionReport run_criterion(unsigned id, const AcceptanceOptions& options) {
    using Fn = CriterionReport (*)(const AcceptanceOptions&);
    static const Fn table[kAcceptanceCriteria] = {
        gadget_identities, self_cancellation, engine_equivalence, oracle_recovery, boson_normalization,
        sampling_fidelity, swap_test_check,   simon_check,        adversary_check, simquery_check,
        performance,
    };
    static const char* const titles[kAcceptanceCriteria] = {
        "gadget identities", "self-cancellation", "engine equivalence", "oracle-to-exact recovery",
        "boson normalization and embedding", "sampling fidelity", "SWAP test", "Simon decisions",
        "adversary", "SimQuery", "performance",
    };
    if (id < 1 || id > kAcceptanceCriteria) {
        throw InvalidInput("acceptance criterion must be in 1.." + std::to_string(kAcceptanceCriteria) + ", got " +
                           std::to_string(id));
    }
    const auto start = Clock::now();
    try {
        return table[id - 1](options);
    } catch (const std::exception& e) {
        return {id, titles[id - 1], false, std::string("exception: ") + e.what(), seconds_since(start)};
    }
}

std::vector<CriterionReport> run_acceptance(const AcceptanceOptions& options, const std::vector<unsigned>& ids,
                                            const std::function<void(const CriterionReport&)>& on_report) {
    std::vector<unsigned> order = ids;
    if (order.empty()) {
        order.resize(kAcceptanceCriteria);
        std::iota(order.begin(), order.end(), 1u);
    }
    std::vector<CriterionReport> reports;
    for (unsigned id : order) {
        reports.push_back(run_criterion(id, options));
        if (on_report) {
            on_report(reports.back());
        }
    }
    return reports;
}

std::string format_report(const CriterionReport& report) {
    std::ostringstream out;
    out << (report.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << report.id << "] " << report.title << ": "
        << report.detail << " (" << std::fixed << std::setprecision(2) << report.seconds << " s)";
    return out.str();
}

}  // namespace permlab
