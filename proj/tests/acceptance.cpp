// Copyright 2026 The shadowlab Authors
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


// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and exits
// 3 if any criterion fails. An optional argument names a JSON summary file.

#include <omp.h>

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "shadowlab/dcr.hpp"
#include "shadowlab/fixtures.hpp"
#include "shadowlab/flipper.hpp"
#include "shadowlab/fourier_demo.hpp"
#include "shadowlab/grover.hpp"
#include "shadowlab/io.hpp"
#include "shadowlab/models.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shadow_collect.hpp"

using namespace shadowlab;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string summary;
    json payload;  // everything a seeded rerun must reproduce exactly
};

double spectral_norm(const qsim::Matrix &m) {
    const Eigen::SelfAdjointEigenSolver<qsim::Matrix> s(m, Eigen::EigenvaluesOnly);
    return s.eigenvalues().cwiseAbs().maxCoeff();
}

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome shadow_coverage() {
    const int trials = 20;
    int hits = 0;
    json devs = json::array();
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(101, static_cast<uint64_t>(t));
        const auto model = fixtures::random_flipped_model(3, 6, 2, 2, 1.0, rng);
        const auto bound = shadow_sample_bound(2, model.weights().bound(), 0.2, 0.1, model.paulis().size());
        const auto shadow = collect_pauli_shadow(model.state_prep(), bound.total, rng.next());
        const ShadowModel surrogate(shadow, model, MoMConfig{bound.groups});
        double worst = 0.0;
        for (const auto &x : fixtures::diagonal_grid(2, 10)) {
            worst = std::max(worst, std::abs(surrogate(x) - eval_flipped_exact(model, x)));
        }
        hits += worst <= 0.2;
        devs.push_back(worst);
    }
    return {hits >= 18, fmt("%.0f/%.0f trials within 0.2 on a 10-point grid (need >= 18)", hits, trials),
            {{"max_deviation", devs}}};
}

Outcome algorithm1_unbiased() {
    double worst_enum = 0.0;
    for (int t = 0; t < 10; ++t) {
        Rng rng = Rng::substream(202, static_cast<uint64_t>(t));
        const std::size_t n = 1 + static_cast<std::size_t>(t % 2);
        const auto m = fixtures::random_conventional_model(n, 2, t % 3 != 0, rng);
        const auto x = fixtures::random_point(n, 0.0, 2 * std::numbers::pi, rng);
        const Algorithm1Sampler s(m, x);
        const double truth = oracle::conventional_value(m, x);
        worst_enum = std::max({worst_enum, std::abs(oracle::algorithm1_enumeration(m, x, s.alpha()) - truth),
                               std::abs(s.exact_mean() - truth)});
    }
    int hits = 0;
    json estimates = json::array();
    for (int t = 0; t < 100; ++t) {
        Rng rng = Rng::substream(203, static_cast<uint64_t>(t));
        const std::size_t n = 1 + static_cast<std::size_t>(t % 2);
        const auto m = fixtures::random_conventional_model(n, 2, true, rng);
        const auto x = fixtures::random_point(n, 0.0, 2 * std::numbers::pi, rng);
        const Algorithm1Sampler s(m, x);
        const auto r = s.run(algorithm1_iterations(s.alpha(), 0.1, 0.05), rng.next());
        hits += std::abs(r.estimate - eval_conventional_exact(m, x)) <= 0.1;
        estimates.push_back(r.estimate);
    }
    const bool pass = worst_enum <= 1e-9 && hits >= 95;
    return {pass, fmt("enumeration error %.1e (need <= 1e-9); %.0f/100 sampled runs within 0.1 (need >= 95)",
                      worst_enum, hits),
            {{"estimates", estimates}}};
}

Outcome flipping() {
    double trace_gap = 0.0;
    double norm_gap = 0.0;
    double tight_gap = 0.0;
    for (int t = 0; t < 20; ++t) {
        Rng rng = Rng::substream(303, static_cast<uint64_t>(t));
        const auto m = fixtures::random_conventional_model(2, 3, true, rng);
        const auto f = flip_conventional(m);
        // Same model normalized by its exact trace norm instead of the term bound.
        const double tn = f.ledger().trace_norm;
        const auto tight = flip_conventional(
            ConventionalLinearModel(m.encoder(), m.initial_state(), m.variational(), m.terms(), tn));
        for (int k = 0; k < 20; ++k) {
            const auto x = fixtures::random_point(2, 0.0, 2 * std::numbers::pi, rng);
            const double truth = oracle::conventional_value(m, x);
            trace_gap = std::max({trace_gap, std::abs(f.evaluate(x) - truth), std::abs(tight.evaluate(x) - truth)});
            norm_gap = std::max(norm_gap, std::abs(spectral_norm(f.observable(x)) - f.ledger().term_bound));
            tight_gap = std::max(tight_gap, std::abs(spectral_norm(tight.observable(x)) - tn));
        }
    }
    const bool pass = trace_gap <= 1e-8 && norm_gap <= 1e-8 && tight_gap <= 1e-8;
    return {pass,
            fmt("trace gap %.1e, ||O'|| vs sum|w|||O_i||_1 gap %.1e, vs exact trace norm gap %.1e (need <= 1e-8)",
                trace_gap, norm_gap, tight_gap),
            json::object()};
}

Outcome dcr_correctness() {
    Rng rng(404);
    bool ok = true;
    json moduli = json::array();
    for (int i = 0; i < 10; ++i) {
        const auto bits = static_cast<unsigned>(16 + (16 * i + 4) / 9);
        const auto m = dcr::generate_modulus(bits, rng);
        ok = ok && m.n_bits == bits && dcr::mulmod(3, m.d, m.phi) == 1;
        for (int k = 0; k < 1000; ++k) {
            const uint64_t y = rng.below(m.N);
            ok = ok && dcr::powmod(dcr::powmod(y, 3, m.N), m.d, m.N) == y;
        }
        moduli.push_back(std::to_string(m.N));
    }
    // Every admissible modulus up to 10^4.
    std::vector<uint64_t> primes;
    for (uint64_t p = 5; p <= 10000 / 5; p += 3) {
        if (dcr::is_probable_prime(p)) {
            primes.push_back(p);
        }
    }
    std::size_t checked = 0;
    for (std::size_t a = 0; a < primes.size(); ++a) {
        for (std::size_t b = a + 1; b < primes.size() && primes[a] * primes[b] <= 10000; ++b) {
            const auto m = dcr::modulus_from_primes(primes[a], primes[b]);
            std::vector<bool> seen(m.N, false);
            for (uint64_t y = 0; y < m.N; ++y) {
                const uint64_t x = dcr::cube(y, m);
                ok = ok && !seen[x] && dcr::cube_root(x, m) == y;
                seen[x] = true;
            }
            ++checked;
        }
    }
    const auto fixed = dcr::modulus_from_primes(5, 11);
    ok = ok && fixed.d == 27 && oracle::brute_inverse(3, 40) == 27;
    return {ok, fmt("10 moduli x 1000 trapdoor checks, bijectivity on all %.0f moduli <= 10^4, d(5, 11) = %.0f",
                    static_cast<double>(checked), static_cast<double>(fixed.d)),
            {{"moduli", moduli}}};
}

Outcome dcr_learning() {
    const std::size_t size = dcr::required_training_size(0.1, 0.05);
    int passes = 0;
    json errors = json::array();
    for (int t = 0; t < 100; ++t) {
        Rng rng = Rng::substream(505, static_cast<uint64_t>(t));
        const auto m = dcr::generate_modulus(16, rng);
        const dcr::Concept c{m, rng.below(m.N)};
        const auto train = dcr::generate_dataset(c, size, rng);
        const auto fresh = dcr::generate_dataset(c, 10000, rng);
        const auto r = dcr::quantum_learn(train, m.N, 0.1, 0.05);
        const double err = dcr::hypothesis_error(r.hypothesis, fresh);
        passes += err <= 0.2;
        errors.push_back(err);
    }
    return {passes >= 90,
            fmt("|X| = %.0f, %.0f/100 trials with held-out error <= 0.2 (need >= 90)", static_cast<double>(size),
                passes),
            {{"errors", errors}}};
}

Outcome separation() {
    double worst_baseline = 0.0;
    double worst_learned = 1.0;
    json rows = json::array();
    for (int t = 0; t < 5; ++t) {
        Rng rng = Rng::substream(606, static_cast<uint64_t>(t));
        const auto m = dcr::generate_modulus(32, rng);
        const dcr::Concept c{m, rng.below(m.N)};
        const auto train = dcr::generate_dataset(c, 2000, rng);
        const auto heldout = dcr::generate_dataset(c, 10000, rng);
        const auto base = dcr::classical_baseline(train, heldout, m.N);
        const auto learned = dcr::quantum_learn(train, m.N, 0.1, 0.05);
        const double acc = 1.0 - dcr::hypothesis_error(learned.hypothesis, heldout);
        worst_baseline = std::max(worst_baseline, base.best());
        worst_learned = std::min(worst_learned, acc);
        rows.push_back({base.threshold_accuracy, base.perceptron_accuracy, base.knn_accuracy, acc});
    }
    return {worst_baseline <= 0.6 && worst_learned >= 0.8,
            fmt("5 moduli at 32 bits: best baseline accuracy %.3f (need <= 0.6), learned %.3f (need >= 0.8)",
                worst_baseline, worst_learned),
            {{"accuracies", rows}}};
}

Outcome grover_demo() {
    Rng rng(707);
    const auto model = grover::GroverModel::random(10, rng);
    const double expected = grover::search_mean(10);
    const double sigma = std::sqrt(grover::search_variance(10) / 200.0);
    json means = json::array();
    bool in_band = true;
    double shown = 0.0;
    for (auto mode : {grover::QueryMode::Expectation, grover::QueryMode::Bernoulli}) {
        const auto counts = grover::search_trials(model, mode, 200, rng.next());
        double sum = 0.0;
        for (auto q : counts) {
            sum += static_cast<double>(q);
        }
        const double mean = sum / 200.0;
        in_band = in_band && std::abs(mean - expected) <= 3 * sigma;
        means.push_back(mean);
        if (mode == grover::QueryMode::Expectation) {
            shown = mean;
        }
    }
    const auto ev = grover::flipped_shadow_recover(model, rng);
    double max_error = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto x = fixtures::random_point(10, 0.0, 2 * std::numbers::pi, rng);
        max_error = std::max(max_error, std::abs(ev(x) - grover::grover_eval(model, x)));
    }
    const bool pass = in_band && ev.measurements() == 1 && max_error == 0.0;
    return {pass,
            fmt("mean queries %.1f in [%.1f, %.1f]", shown, expected - 3 * sigma, expected + 3 * sigma) +
                fmt("; shadow: %.0f measurement, max error %.1e", static_cast<double>(ev.measurements()), max_error),
            {{"means", means}, {"recovered", ev.recovered().str()}}};
}

std::string cli_output(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    std::vector<std::string> full{"shadowlab"};
    full.insert(full.end(), args.begin(), args.end());
    shadowlab::cli::run(full, out, err);
    return out.str() + err.str();
}

struct Criterion {
    int id;
    const char *name;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> criteria{
        {1, "shadow coverage", 120, shadow_coverage},   {2, "algorithm 1 unbiasedness", 60, algorithm1_unbiased},
        {3, "flipping construction", 30, flipping},     {4, "dcr correctness", 60, dcr_correctness},
        {5, "dcr learning guarantee", 120, dcr_learning}, {6, "separation exhibit", 180, separation},
        {7, "grover demo", 60, grover_demo},
    };
    json summary = json::array();
    std::vector<std::string> payloads;
    bool all = true;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.pass && secs < c.budget_s;
        all = all && pass;
        payloads.push_back(io::dump(o.payload));
        std::printf("%s %d %s: %s [%.1f s, budget %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.summary.c_str(), secs, c.budget_s);
        std::fflush(stdout);
        summary.push_back({{"id", c.id}, {"name", c.name}, {"pass", pass}, {"seconds", secs}, {"summary", o.summary}});
    }

    // Replay every randomized criterion under a different thread count and
    // compare payloads byte for byte, then replay two CLI reports.
    {
        const auto start = std::chrono::steady_clock::now();
        const int threads = omp_get_max_threads();
        omp_set_num_threads(threads == 1 ? 2 : 1);
        std::size_t identical = 0;
        for (std::size_t i = 0; i < criteria.size(); ++i) {
            identical += io::dump(criteria[i].run().payload) == payloads[i];
        }
        omp_set_num_threads(threads);
        const std::vector<std::string> grover{"grover", "--n", "8", "--trials", "100", "--seed", "9"};
        const std::vector<std::string> flip{"flip", "--seed", "9", "--models", "4", "--inputs", "4"};
        const bool cli_same = cli_output(grover) == cli_output(grover) && cli_output(flip) == cli_output(flip);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = identical == criteria.size() && cli_same;
        all = all && pass;
        std::printf("%s 8 determinism: %zu/%zu criterion payloads replay byte-identically across thread counts; "
                    "CLI reports %s [%.1f s]\n",
                    pass ? "PASS" : "FAIL", identical, criteria.size(), cli_same ? "identical" : "DIFFER", secs);
        summary.push_back({{"id", 8}, {"name", "determinism"}, {"pass", pass}, {"seconds", secs}});
    }

    if (argc > 1) {
        io::write_text_file(argv[1], io::dump(summary));
    }
    return all ? 0 : 3;
}
