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

// permlab: command-line front end.
//
// Exit status: 0 on success, 1 on a failed verification, 2 on malformed input.
// Integers and rationals are printed as strings, reals with 12 significant
// digits. Reports are byte-identical for identical invocations unless
// --verbose adds timings.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permlab/acceptance.hpp"
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

namespace {

using namespace permlab;
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Seed used by every randomized subcommand when --seed is not given.
constexpr std::uint64_t kDefaultSeed = 1;

enum class Format { json, csv };

std::string real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_json(std::ostream& out, const Json& j) {
    if (j.is_object()) {
        out << '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            out << (first ? "" : ", ") << Json(key).dump() << ": ";
            write_json(out, value);
            first = false;
        }
        out << '}';
    } else if (j.is_array()) {
        out << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << (i ? ", " : "");
            write_json(out, j[i]);
        }
        out << ']';
    } else if (j.is_number_float()) {
        out << real(j.get<double>());
    } else {
        out << j.dump();
    }
}

std::string csv_cell(const Json& j) {
    std::string s;
    if (j.is_string()) {
        s = j.get<std::string>();
    } else if (j.is_number_float()) {
        s = real(j.get<double>());
    } else {
        std::ostringstream tmp;
        write_json(tmp, j);
        s = tmp.str();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : s) {
            quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return quoted + "\"";
    }
    return s;
}

void write_csv_rows(std::ostream& out, const Json& rows) {
    if (rows.empty()) {
        return;
    }
    bool first = true;
    for (const auto& [key, value] : rows[0].items()) {
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, value] : row.items()) {
            out << (first ? "" : ",") << csv_cell(value);
            first = false;
        }
        out << '\n';
    }
}

// A report with a "rows" array prints as that table; otherwise the scalar
// fields form a single row.
void emit(const Json& report, Format format) {
    if (format == Format::json) {
        write_json(std::cout, report);
        std::cout << '\n';
        return;
    }
    if (report.contains("rows")) {
        write_csv_rows(std::cout, report["rows"]);
        return;
    }
    Json row = Json::object();
    for (const auto& [key, value] : report.items()) {
        if (!value.is_structured()) {
            row[key] = value;
        }
    }
    write_csv_rows(std::cout, Json::array({row}));
}

struct Common {
    std::string format = "json";
    bool verbose = false;
    unsigned threads = 0;
};

void add_common(CLI::App* sub, Common& common, const char* default_format = "json") {
    common.format = default_format;
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("-v,--verbose", common.verbose, "Add timings and extra detail to the report");
    sub->add_option("--threads", common.threads, "Worker threads (0 = automatic)");
}

Format format_of(const Common& c) { return c.format == "csv" ? Format::csv : Format::json; }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

StateVector parse_state(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("state file is not JSON: ") + e.what());
    }
    const Json& amps = j.is_object() && j.contains("amplitudes") ? j["amplitudes"] : j;
    if (!amps.is_array()) {
        throw InvalidInput("state must be a JSON array of [re, im] pairs or {\"amplitudes\": [...]}");
    }
    std::vector<Amplitude> out;
    for (const auto& a : amps) {
        if (a.is_number()) {
            out.emplace_back(a.get<double>(), 0.0);
        } else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number()) {
            out.emplace_back(a[0].get<double>(), a[1].get<double>());
        } else {
            throw InvalidInput("state amplitude must be a number or [re, im]");
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

std::unique_ptr<ApproxOracle> make_oracle(const std::string& choice, std::uint64_t seed) {
    if (choice == "exact") {
        return make_exact_oracle();
    }
    if (choice == "boson") {
        return make_boson_oracle(BosonOracleMode::exact());
    }
    if (choice.rfind("boson:", 0) == 0) {
        try {
            return make_boson_oracle(BosonOracleMode::empirical(std::stoull(choice.substr(6)), seed));
        } catch (const std::logic_error&) {
            throw InvalidInput("oracle 'boson:SAMPLES' needs an integer sample count, got '" + choice + "'");
        }
    }
    if (choice.rfind("noisy:", 0) == 0) {
        double g = 0;
        try {
            std::size_t used = 0;
            g = std::stod(choice.substr(6), &used);
            if (used != choice.size() - 6) {
                throw std::invalid_argument("trailing text");
            }
        } catch (const std::logic_error&) {
            throw InvalidInput("oracle 'noisy:G' needs a real factor G, got '" + choice + "'");
        }
        return make_noisy_oracle(g, seed);
    }
    throw InvalidInput("oracle must be exact, noisy:G, boson or boson:SAMPLES; got '" + choice + "'");
}

std::vector<bool> parse_bits(const std::string& text, const char* what) {
    std::vector<bool> out;
    for (char c : text) {
        if (c == '0' || c == '1') {
            out.push_back(c == '1');
        } else if (c != ',') {
            throw InvalidInput(std::string(what) + " must be a string of 0/1 answers, got '" + text + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: permanents, gadget recovery, boson sampling and query-model experiments"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    std::function<int()> action;

    // ---- perm ----------------------------------------------------------
    Common perm_c;
    std::string perm_matrix, perm_method = "ryser";
    auto* perm = app.add_subcommand("perm", "Exact permanent of an integer matrix");
    perm->add_option("--matrix", perm_matrix, "Matrix file (text or JSON)")->required();
    perm->add_option("--method", perm_method, "ryser or naive")->check(CLI::IsMember({"ryser", "naive"}));
    add_common(perm, perm_c);
    perm->callback([&] {
        action = [&] {
            const IntMatrix m = read_matrix_file(perm_matrix);
            const auto t = Clock::now();
            const BigInt p = perm_method == "naive" ? permanent_naive(m) : permanent_ryser(m, {perm_c.threads});
            Json r;
            r["permanent"] = p.str();
            if (perm_c.verbose) {
                r["dim"] = m.dim();
                r["method"] = perm_method;
                r["seconds"] = seconds_since(t);
            }
            emit(r, format_of(perm_c));
            return 0;
        };
    });

    // ---- gadget-check --------------------------------------------------
    Common gad_c;
    std::string gad_matrix;
    auto* gad = app.add_subcommand("gadget-check", "Build Z and W for a sign matrix and verify their identities");
    gad->add_option("--matrix", gad_matrix, "Sign matrix file")->required();
    add_common(gad, gad_c);
    gad->callback([&] {
        action = [&] {
            const IntMatrix x = read_matrix_file(gad_matrix);
            const IntMatrix z = build_z(x).z;
            const std::size_t last = z.dim() - 1;
            const BigInt per_x = permanent_ryser(x);
            const BigInt per_x11 = permanent_ryser(minor(x, 0, 0));
            const BigInt per_z = permanent_ryser(z);
            const BigInt per_zmm = permanent_ryser(minor(z, last, last));
            const BigInt per_w = permanent_ryser(build_w(z, x));
            const bool z_ok = per_z == -per_x;
            const bool minor_ok = per_zmm == per_x11;
            const bool w_ok = per_w == per_z * per_x11 + per_zmm * per_x && per_w == 0;
            Json r;
            r["per_x"] = per_x.str();
            r["per_x_minor"] = per_x11.str();
            r["per_z"] = per_z.str();
            r["per_z_minor"] = per_zmm.str();
            r["per_w_self"] = per_w.str();
            r["z_identity"] = z_ok;
            r["minor_identity"] = minor_ok;
            r["self_cancellation"] = w_ok;
            if (gad_c.verbose) {
                r["z"] = z.str();
            }
            emit(r, format_of(gad_c));
            if (!(z_ok && minor_ok && w_ok)) {
                std::cerr << "error: gadget identity violated\n";
                return 1;
            }
            return 0;
        };
    });

    // ---- advice-gen ----------------------------------------------------
    Common adv_c;
    std::size_t adv_k = 0;
    std::string adv_dir, adv_out;
    auto* adv = app.add_subcommand("advice-gen", "Generate (or load cached) gadget advice for k x k inputs");
    adv->add_option("--k", adv_k, "Input dimension")->required()->check(CLI::Range(1, 4));
    adv->add_option("--dir", adv_dir, "Cache directory (default $PERMLAB_ADVICE_DIR or .permlab-cache)");
    adv->add_option("--out", adv_out, "Also write the table to this file");
    add_common(adv, adv_c);
    adv->callback([&] {
        action = [&] {
            const auto dir = adv_dir.empty() ? default_advice_dir() : std::filesystem::path(adv_dir);
            const auto t = Clock::now();
            const AdviceTable table = load_or_generate_advice(adv_k, dir, adv_c.threads);
            validate_advice(table);
            if (!adv_out.empty()) {
                std::ofstream out(adv_out);
                if (!out) {
                    throw InvalidInput("cannot write advice file: " + adv_out);
                }
                write_advice(out, table);
            }
            Json r;
            r["k"] = adv_k;
            r["count"] = table.entries.size();
            r["path"] = (dir / ("advice_k" + std::to_string(adv_k) + ".txt")).string();
            Json rows = Json::array();
            Json ratios = Json::array();
            for (std::size_t i = 0; i < table.entries.size(); ++i) {
                const auto& e = table.entries[i];
                ratios.push_back(e.ratio.str());
                rows.push_back(Json{{"index", i}, {"ratio", e.ratio.str()}, {"alpha", e.alpha.str()}});
            }
            r["ratios"] = ratios;
            if (adv_c.verbose) {
                r["seconds"] = seconds_since(t);
            }
            if (format_of(adv_c) == Format::csv) {
                r["rows"] = rows;
            }
            emit(r, format_of(adv_c));
            return 0;
        };
    });

    // ---- recover -------------------------------------------------------
    Common rec_c;
    std::string rec_matrix, rec_oracle = "exact", rec_dir, rec_search = "bisect";
    std::uint64_t rec_seed = kDefaultSeed;
    auto* rec = app.add_subcommand("recover", "Recover Per(X) exactly from a Per^2 approximation oracle");
    rec->add_option("--matrix", rec_matrix, "Sign matrix file")->required();
    rec->add_option("--oracle", rec_oracle, "exact | noisy:G | boson | boson:SAMPLES");
    rec->add_option("--seed", rec_seed, "Seed for randomized oracles");
    rec->add_option("--advice-dir", rec_dir, "Advice cache directory");
    rec->add_option("--search", rec_search, "bisect or linear")->check(CLI::IsMember({"bisect", "linear"}));
    add_common(rec, rec_c);
    rec->callback([&] {
        action = [&] {
            const IntMatrix x = read_matrix_file(rec_matrix);
            if (!x.is_sign_matrix()) {
                throw InvalidInput("recover: matrix has an entry outside {-1, 0, 1}");
            }
            const auto dir = rec_dir.empty() ? default_advice_dir() : std::filesystem::path(rec_dir);
            const AdviceSet advice = load_advice_set(std::max<std::size_t>(x.dim(), 1), dir, rec_c.threads);
            auto oracle = make_oracle(rec_oracle, rec_seed);
            RecoveryTrace trace;
            const auto t = Clock::now();
            const BigInt p = recover_permanent(
                x, *oracle, advice, {rec_search == "linear" ? SearchMode::linear : SearchMode::bisect}, &trace);
            Json r;
            r["permanent"] = p.str();
            r["oracle"] = oracle->name();
            r["seed"] = rec_seed;
            r["queries"] = oracle->query_count();
            Json levels = Json::array();
            for (const auto& lvl : trace.levels) {
                Json l;
                l["dim"] = lvl.dim;
                l["queries"] = lvl.queries;
                l["advice_index"] = lvl.advice_index ? Json(*lvl.advice_index) : Json(nullptr);
                l["fallback"] = lvl.fallback;
                l["outcome"] = lvl.outcome;
                levels.push_back(l);
            }
            r["levels"] = levels;
            if (rec_c.verbose) {
                r["seconds"] = seconds_since(t);
            }
            emit(r, format_of(rec_c));
            return 0;
        };
    });

    // ---- boson-dist / boson-sample -------------------------------------
    Common bd_c;
    std::string bd_network;
    auto* bd = app.add_subcommand("boson-dist", "Exact output distribution of a linear-optical network");
    bd->add_option("--network", bd_network, "Network JSON file")->required();
    add_common(bd, bd_c, "csv");
    bd->callback([&] {
        action = [&] {
            const auto dist = full_distribution(read_network_file(bd_network), bd_c.threads);
            Json rows = Json::array();
            double total = 0.0;
            for (std::size_t i = 0; i < dist.states.size(); ++i) {
                rows.push_back(Json{{"state", dist.states[i].str()}, {"prob", dist.probs[i]}});
                total += dist.probs[i];
            }
            Json r;
            r["modes"] = dist.network.modes();
            r["photons"] = dist.network.photons();
            r["states"] = dist.states.size();
            r["total"] = total;
            r["rows"] = rows;
            emit(r, format_of(bd_c));
            return 0;
        };
    });

    Common bs_c;
    std::string bs_network;
    std::size_t bs_count = 1000;
    std::uint64_t bs_seed = kDefaultSeed;
    auto* bs = app.add_subcommand("boson-sample", "Exact samples from a linear-optical network");
    bs->add_option("--network", bs_network, "Network JSON file")->required();
    bs->add_option("--count", bs_count, "Number of samples");
    bs->add_option("--seed", bs_seed, "Sampling seed");
    add_common(bs, bs_c, "csv");
    bs->callback([&] {
        action = [&] {
            const auto dist = full_distribution(read_network_file(bs_network), bs_c.threads);
            const auto samples = sample(dist, bs_seed, bs_count);
            Json rows = Json::array();
            for (const auto& s : samples) {
                rows.push_back(Json{{"state", s.str()}});
            }
            Json r;
            r["count"] = samples.size();
            r["seed"] = bs_seed;
            r["total_variation"] = total_variation(dist, samples);
            r["rows"] = rows;
            emit(r, format_of(bs_c));
            return 0;
        };
    });

    // ---- embed ---------------------------------------------------------
    Common em_c;
    std::string em_matrix;
    double em_eps = 0.0;
    auto* em = app.add_subcommand("embed", "Embed eps*M into a 2k x k network; report Pr(1_k) against eps^{2k} Per(M)^2");
    em->add_option("--matrix", em_matrix, "Sign matrix file")->required();
    em->add_option("--eps", em_eps, "Scale in (0, 1/k]; default 1/k");
    add_common(em, em_c);
    em->callback([&] {
        action = [&] {
            const IntMatrix m = read_matrix_file(em_matrix);
            const std::size_t k = m.dim();
            const double eps = em_eps > 0 ? em_eps : 1.0 / static_cast<double>(std::max<std::size_t>(k, 1));
            const LinearNetwork net = embed_scaled(m, eps);
            const double p = outcome_probability(net, unit_state(net.modes(), k));
            const double per = static_cast<double>(permanent_ryser(m));
            const double expected = std::pow(eps, 2.0 * static_cast<double>(k)) * per * per;
            Json r;
            r["eps"] = eps;
            r["probability"] = p;
            r["expected"] = expected;
            r["abs_error"] = std::abs(p - expected);
            r["orthonormality_error"] = orthonormality_error(net.matrix());
            r["network"] = Json::parse(network_to_json(net));
            emit(r, format_of(em_c));
            return std::abs(p - expected) <= 1e-9 ? 0 : 1;
        };
    });

    // ---- simon ---------------------------------------------------------
    Common si_c;
    unsigned si_n = 4;
    std::string si_kind = "simon";
    std::uint64_t si_seed = kDefaultSeed;
    auto* si = app.add_subcommand("simon", "Decide injective vs Simon for a random function by simulation");
    si->add_option("--n", si_n, "Input bits")->check(CLI::Range(1u, 10u));
    si->add_option("--kind", si_kind, "injective or simon")->check(CLI::IsMember({"injective", "simon"}));
    si->add_option("--seed", si_seed, "Seed for the function and the measurements");
    add_common(si, si_c);
    si->callback([&] {
        action = [&] {
            std::mt19937_64 rng(mix_seed(si_seed, 0));
            const FunctionTable f = si_kind == "simon" ? random_simon(si_n, rng) : random_injective(si_n, rng);
            const auto t = Clock::now();
            const SimonResult res = simon_decide(f, mix_seed(si_seed, 1));
            const bool said_simon = res.decision == SimonResult::Decision::simon;
            const bool correct = said_simon == (si_kind == "simon") && (!said_simon || res.mask == f.mask);
            Json r;
            r["n"] = si_n;
            r["kind"] = si_kind;
            r["decision"] = said_simon ? "simon" : "injective";
            if (said_simon) {
                r["mask"] = std::to_string(res.mask);
            }
            r["rounds"] = res.rounds;
            r["correct"] = correct;
            Json ys = Json::array();
            for (auto y : res.measurements) {
                ys.push_back(std::to_string(y));
            }
            r["measurements"] = ys;
            if (si_c.verbose) {
                r["seconds"] = seconds_since(t);
            }
            emit(r, format_of(si_c));
            return correct ? 0 : 1;
        };
    });

    // ---- swap-test -----------------------------------------------------
    Common sw_c;
    std::string sw_psi, sw_phi;
    unsigned sw_random = 0;
    std::uint64_t sw_shots = 0, sw_seed = kDefaultSeed;
    auto* sw = app.add_subcommand("swap-test", "SWAP test on two states: files, or a random pair");
    sw->add_option("--psi", sw_psi, "State JSON file ([re, im] amplitudes)");
    sw->add_option("--phi", sw_phi, "State JSON file ([re, im] amplitudes)");
    sw->add_option("--random", sw_random, "Use a random pair on this many qubits")->check(CLI::Range(1u, 9u));
    sw->add_option("--shots", sw_shots, "Sampled measurement shots");
    sw->add_option("--seed", sw_seed, "Seed for random states and shots");
    add_common(sw, sw_c);
    sw->callback([&] {
        action = [&] {
            std::mt19937_64 rng(mix_seed(sw_seed, 0));
            const bool files = !sw_psi.empty() || !sw_phi.empty();
            if (files == (sw_random > 0) || (files && (sw_psi.empty() || sw_phi.empty()))) {
                throw InvalidInput("swap-test needs either --psi and --phi, or --random Q");
            }
            const StateVector psi = files ? parse_state(read_text(sw_psi)) : random_state(sw_random, rng);
            const StateVector phi = files ? parse_state(read_text(sw_phi)) : random_state(sw_random, rng);
            const SwapTestResult res = swap_test(psi, phi, sw_shots, mix_seed(sw_seed, 1));
            Json r;
            r["qubits"] = psi.num_qubits();
            r["accept_probability"] = res.accept_probability;
            r["overlap_formula"] = res.overlap_formula;
            r["shots"] = res.shots;
            r["accepted"] = res.accepted;
            emit(r, format_of(sw_c));
            return 0;
        };
    });

    // ---- simquery ------------------------------------------------------
    Common sq_c;
    std::string sq_l = "10", sq_lc = "01";
    unsigned sq_coins = 7, sq_wrong = 1;
    std::uint64_t sq_x = 0;
    auto* sq = app.add_subcommand("simquery", "Run the SimQuery circuit on toy deciders for L and its complement");
    sq->add_option("--accept-l", sq_l, "Answers of the L decider per input, e.g. 10");
    sq->add_option("--accept-lc", sq_lc, "Answers of the complement decider per input, e.g. 01");
    sq->add_option("--coin-bits", sq_coins, "Coin register width")->check(CLI::Range(0u, 8u));
    sq->add_option("--wrong-coins", sq_wrong, "Coin values on which each decider errs");
    sq->add_option("--x", sq_x, "Input");
    add_common(sq, sq_c);
    sq->callback([&] {
        action = [&] {
            const auto l = parse_bits(sq_l, "--accept-l");
            const auto lc = parse_bits(sq_lc, "--accept-lc");
            if (l.size() != lc.size() || l.empty() || (l.size() & (l.size() - 1))) {
                throw InvalidInput("--accept-l and --accept-lc need the same power-of-two length");
            }
            const auto bits = static_cast<unsigned>(std::countr_zero(l.size()));
            if (sq_x >= l.size()) {
                throw InvalidInput("--x is out of range for " + std::to_string(l.size()) + " inputs");
            }
            const Circuit circuit = build_simquery(toy_decider(bits, sq_coins, l, sq_wrong),
                                                   toy_decider(bits, sq_coins, lc, sq_wrong));
            const unsigned out = *circuit.output_qubit;
            const unsigned t = out / 2;
            const std::uint64_t in = sq_x | sq_x << t;
            const StateVector s = run(circuit, StateVector::basis(circuit.num_qubits(), in));
            // Probability the work registers return to the input, flip or not.
            const double restored = s.probability(in) + s.probability(in | std::uint64_t{1} << out);
            Json r;
            r["qubits"] = circuit.num_qubits();
            r["x"] = sq_x;
            r["decider_error"] = static_cast<double>(sq_wrong) / static_cast<double>(1u << sq_coins);
            r["flip_probability"] = s.probability_one(out);
            r["restored_probability"] = restored;
            emit(r, format_of(sq_c));
            return 0;
        };
    });

    // ---- adversary -----------------------------------------------------
    Common ad_c;
    unsigned ad_n = 8;
    std::uint64_t ad_l = 10, ad_trials = 100000, ad_seed = kDefaultSeed;
    auto* ad = app.add_subcommand("adversary", "Collision formula and the classical distinguishing experiment");
    ad->add_option("--n", ad_n, "Input bits");
    ad->add_option("--queries", ad_l, "Queries per trial (l)");
    ad->add_option("--trials", ad_trials, "Number of trials");
    ad->add_option("--seed", ad_seed, "Experiment seed");
    add_common(ad, ad_c, "csv");
    ad->callback([&] {
        action = [&] {
            const Rational formula = collision_probability(ad_n, ad_l);
            const ExperimentResult res = run_distinguishing_experiment(ad_n, ad_l, ad_trials, ad_seed, ad_c.threads);
            Json r;
            r["n"] = ad_n;
            r["queries"] = ad_l;
            r["trials"] = res.trials;
            r["formula"] = formula.str();
            r["formula_value"] = static_cast<double>(formula);
            r["collisions"] = res.collisions;
            r["rate"] = res.rate;
            r["standard_error"] = res.standard_error;
            emit(r, format_of(ad_c));
            return 0;
        };
    });

    // ---- verify-all ----------------------------------------------------
    Common va_c;
    std::string va_scale = "desk", va_dir;
    std::vector<unsigned> va_only;
    std::uint64_t va_seed = AcceptanceOptions{}.seed;
    auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
    va->add_option("--scale", va_scale, "Problem scale")->check(CLI::IsMember({"desk"}));
    va->add_option("--only", va_only, "Run only these criteria")->delimiter(',');
    va->add_option("--advice-dir", va_dir, "Advice cache directory");
    va->add_option("--seed", va_seed, "Suite seed");
    add_common(va, va_c);
    va->callback([&] {
        action = [&] {
            AcceptanceOptions opt;
            opt.advice_dir = va_dir.empty() ? default_advice_dir() : std::filesystem::path(va_dir);
            opt.threads = va_c.threads;
            opt.seed = va_seed;
            for (unsigned id : va_only) {
                if (id < 1 || id > kAcceptanceCriteria) {
                    throw InvalidInput("--only: criterion " + std::to_string(id) + " does not exist");
                }
            }
            bool all = true;
            Json rows = Json::array();
            run_acceptance(opt, va_only, [&](const CriterionReport& rep) {
                all = all && rep.pass;
                if (format_of(va_c) == Format::json && !va_c.verbose) {
                    // Human-readable progress goes to stderr; the report stays on stdout.
                    std::cerr << format_report(rep) << std::endl;
                }
                Json row;
                row["criterion"] = rep.id;
                row["title"] = rep.title;
                row["result"] = rep.pass ? "PASS" : "FAIL";
                row["detail"] = rep.detail;
                if (va_c.verbose) {
                    row["seconds"] = rep.seconds;
                }
                rows.push_back(row);
            });
            Json r;
            r["scale"] = va_scale;
            r["passed"] = all;
            r["rows"] = rows;
            emit(r, format_of(va_c));
            return all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
