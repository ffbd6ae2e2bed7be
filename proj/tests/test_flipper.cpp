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


#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/fixtures.hpp"
#include "shadowlab/flipper.hpp"
#include "shadowlab/models.hpp"

using namespace shadowlab;

namespace {

// U(x) = I, rho_0 = |0><0|, O = Z
ConventionalLinearModel z_model(double weight = 1.0) {
    CircuitTemplate enc(1);
    return ConventionalLinearModel(enc, {{0, 1.0}}, CircuitSpec(1), {{weight, CircuitSpec(1), {1.0, -1.0}}});
}

double spectral_norm(const qsim::Matrix &m) {
    const Eigen::SelfAdjointEigenSolver<qsim::Matrix> s(m, Eigen::EigenvaluesOnly);
    return s.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("norm ledger examples") {
    const auto z = term_norm_ledger(z_model());
    CHECK(z.trace_norm == doctest::Approx(2.0));
    CHECK(z.spectral_norm == doctest::Approx(1.0));
    CHECK(z.term_bound == doctest::Approx(2.0));

    CircuitTemplate enc(2);
    const ConventionalLinearModel zz(enc, {{0, 1.0}}, CircuitSpec(2), {{1.0, CircuitSpec(2), {1, -1, -1, 1}}});
    CHECK(term_norm_ledger(zz).trace_norm == doctest::Approx(4.0));
}

TEST_CASE("norm ledger matches dense singular values") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto m = fixtures::random_conventional_model(2, 2, true, rng);
        const auto ledger = term_norm_ledger(m);
        const Eigen::JacobiSVD<qsim::Matrix> svd(oracle::observable(m));
        CHECK(std::abs(ledger.trace_norm - svd.singularValues().sum()) < 1e-8);
        CHECK(std::abs(ledger.spectral_norm - svd.singularValues().maxCoeff()) < 1e-8);
        CHECK(ledger.trace_norm >= ledger.spectral_norm);
        CHECK(ledger.term_bound >= ledger.trace_norm - 1e-12);
    }
}

TEST_CASE("flip of the single-qubit Z model") {
    const auto f = flip_conventional(z_model());
    CHECK(f.alpha() == doctest::Approx(2.0));
    CHECK(f.p_plus() == doctest::Approx(0.5));
    CHECK(f.p_minus() == doctest::Approx(0.5));
    CHECK(std::abs(f.p_zero()) < 1e-15);
    // rho' = 1/2 |00><00| + 1/2 |11><11|
    const auto state = f.state();
    const auto &rho = state.matrix();
    qsim::Matrix expected = qsim::Matrix::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(3, 3) = 0.5;
    CHECK((rho - expected).cwiseAbs().maxCoeff() < 1e-12);
    // O'(x) = 2 (|0><0| - |1><1|) (x) |0><0|
    const auto obs = f.observable(std::vector<double>{});
    qsim::Matrix expected_obs = qsim::Matrix::Zero(4, 4);
    expected_obs(0, 0) = 2.0;
    expected_obs(2, 2) = -2.0;
    CHECK((obs - expected_obs).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(f.evaluate(std::vector<double>{}) == doctest::Approx(1.0));
}

TEST_CASE("positive semidefinite observables have no negative part") {
    CircuitTemplate enc(1);
    const ConventionalLinearModel psd(enc, {{0, 1.0}}, CircuitSpec(1), {{0.5, CircuitSpec(1).h(0), {1.0, 0.25}}});
    const auto f = flip_conventional(psd);
    CHECK(f.p_minus() == 0.0);
    CHECK(f.p_plus() == doctest::Approx(1.0));
}

TEST_CASE("flipping preserves the model on random instances") {
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const bool pure = trial % 2 == 0;
        const auto m = fixtures::random_conventional_model(2, 2, pure, rng);
        const auto f = flip_conventional(m);
        CHECK(std::abs(f.p_plus() + f.p_minus() + f.p_zero() - 1.0) < 1e-9);
        CHECK(f.p_zero() >= -1e-12);
        double max_rho0 = 0.0;
        for (const auto &[index, p] : m.initial_state()) {
            max_rho0 = std::max(max_rho0, p);
        }
        for (int k = 0; k < 20; ++k) {
            const auto x = fixtures::random_point(2, 0.0, 2 * std::numbers::pi, rng);
            CHECK(std::abs(f.evaluate(x) - oracle::conventional_value(m, x)) < 1e-8);
            // ||O'||_inf = alpha * max_j rho0_j, which is alpha for pure rho_0.
            const double norm = spectral_norm(f.observable(x));
            CHECK(std::abs(norm - f.alpha() * max_rho0) < 1e-8);
            if (pure) {
                CHECK(std::abs(norm - f.alpha()) < 1e-8);
            }
        }
    }
}

TEST_CASE("flip with a declared bound equal to the dense trace norm") {
    Rng rng(43);
    auto m = fixtures::random_conventional_model(2, 3, true, rng);
    const double tn = term_norm_ledger(m).trace_norm;
    const ConventionalLinearModel tight(m.encoder(), m.initial_state(), m.variational(), m.terms(), tn);
    const auto f = flip_conventional(tight);
    CHECK(f.alpha() == doctest::Approx(tn));
    CHECK(std::abs(f.p_zero()) < 1e-9);
    const std::vector<double> x{0.3, 1.1};
    CHECK(std::abs(f.evaluate(x) - oracle::conventional_value(m, x)) < 1e-8);
    CHECK(std::abs(spectral_norm(f.observable(x)) - tn) < 1e-8);
    const ConventionalLinearModel too_small(m.encoder(), m.initial_state(), m.variational(), m.terms(), 0.5 * tn);
    CHECK_THROWS_AS(flip_conventional(too_small), ValidationError);
}

TEST_CASE("flip rejects registers above the dense limit") {
    CircuitTemplate enc(10);
    std::vector<double> eig(1024, 0.0);
    eig[0] = 1.0;
    const ConventionalLinearModel big(enc, {{0, 1.0}}, CircuitSpec(10), {{1.0, CircuitSpec(10), eig}});
    CHECK_THROWS_AS(flip_conventional(big), ValidationError);
}

TEST_CASE("algorithm 1 on the single-qubit Z model") {
    const std::vector<double> x{};
    const Algorithm1Sampler s(z_model(), x);
    CHECK(s.alpha() == doctest::Approx(2.0));
    CHECK(s.slack_probability() == 0.0);
    CHECK(s.exact_mean() == doctest::Approx(1.0));
    CHECK(s.contribution_values() == std::vector<double>{-2.0, 0.0, 2.0});
    // +2 with probability 1/2, 0 otherwise
    Rng rng(44);
    int plus = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto o = s.draw(rng);
        REQUIRE(!o.slack);
        if (o.hit) {
            REQUIRE(o.sign == 1);
            ++plus;
        }
    }
    CHECK(std::abs(plus / double(draws) - 0.5) < 0.01);
}

TEST_CASE("algorithm 1 with all weights zero returns 0") {
    const auto r = algorithm1_run(z_model(0.0), std::vector<double>{}, 1000, 1);
    CHECK(r.estimate == 0.0);
    CHECK(r.slack_iterations == 1000);
}

TEST_CASE("algorithm 1 exhaustive enumeration reproduces the model") {
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const auto m = fixtures::random_conventional_model(n, 2, trial % 3 != 0, rng);
        const auto x = fixtures::random_point(n, 0.0, 2 * std::numbers::pi, rng);
        const Algorithm1Sampler s(m, x);
        const double truth = oracle::conventional_value(m, x);
        CHECK(std::abs(oracle::algorithm1_enumeration(m, x, s.alpha()) - truth) < 1e-9);
        CHECK(std::abs(s.exact_mean() - truth) < 1e-9);
    }
}

TEST_CASE("algorithm 1 with slack keeps its mean") {
    const auto base = z_model(0.5);
    const ConventionalLinearModel padded(base.encoder(), base.initial_state(), base.variational(), base.terms(), 3.0);
    const Algorithm1Sampler s(padded, std::vector<double>{});
    CHECK(s.slack_probability() == doctest::Approx(2.0 / 3.0));
    CHECK(s.exact_mean() == doctest::Approx(0.5));
    const ConventionalLinearModel under(base.encoder(), base.initial_state(), base.variational(), base.terms(), 0.5);
    CHECK_THROWS_AS(Algorithm1Sampler(under, std::vector<double>{}), ValidationError);
}

TEST_CASE("algorithm 1 contributions lie in the allowed set") {
    Rng rng(46);
    const auto m = fixtures::random_conventional_model(2, 2, false, rng);
    const std::vector<double> x{0.5, 0.2};
    const Algorithm1Sampler s(m, x);
    double max_rho0 = 0.0;
    for (const auto &[index, p] : m.initial_state()) {
        max_rho0 = std::max(max_rho0, p);
    }
    for (double v : s.contribution_values()) {
        CHECK(std::abs(v) <= s.alpha() * max_rho0 + 1e-12);
    }
}

TEST_CASE("algorithm 1 iteration count") {
    CHECK(algorithm1_iterations(1.0, 0.1, 0.05) == 2952);
    CHECK(algorithm1_iterations(0.0, 0.1, 0.05) == 1);
    CHECK_THROWS_AS(algorithm1_iterations(1.0, 0.0, 0.05), ValidationError);
}

TEST_CASE("algorithm 1 coverage on random 2-qubit models") {
    int hits = 0;
    for (uint64_t t = 0; t < 100; ++t) {
        Rng rng(7000 + t);
        const auto m = fixtures::random_conventional_model(2, 2, true, rng);
        const auto x = fixtures::random_point(2, 0.0, 2 * std::numbers::pi, rng);
        const Algorithm1Sampler s(m, x);
        const uint64_t iters = algorithm1_iterations(s.alpha(), 0.1, 0.05);
        hits += std::abs(s.run(iters, rng.next()).estimate - eval_conventional_exact(m, x)) <= 0.1;
    }
    CHECK(hits >= 95);
}

TEST_CASE("algorithm 1 parallel run matches the serial reference") {
    Rng rng(47);
    const auto m = fixtures::random_conventional_model(3, 3, false, rng);
    const std::vector<double> x{0.1, 0.2, 0.3};
    const auto a = algorithm1_run(m, x, 20000, 5);
    const auto b = reference::algorithm1_run(m, x, 20000, 5);
    CHECK(a.estimate == b.estimate);
    CHECK(a.slack_iterations == b.slack_iterations);
    CHECK_THROWS_AS(algorithm1_run(m, x, 0, 5), ValidationError);
}
