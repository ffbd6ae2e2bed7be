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


#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/fixtures.hpp"
#include "shadowlab/qsim.hpp"

using namespace shadowlab;
using qsim::Statevector;

namespace {

constexpr double kPi = std::numbers::pi;

Statevector run(const CircuitSpec &c) { return qsim::apply_circuit(Statevector::zero(c.num_qubits()), c); }

}  // namespace

TEST_CASE("apply_circuit basic identities") {
    CircuitSpec empty(1);
    CHECK(run(empty)[0] == qsim::Complex(1.0, 0.0));

    CircuitSpec flip(1);
    flip.ry(0, kPi / 2);
    const auto one = run(flip);
    CHECK(std::abs(one[0]) < 1e-15);
    CHECK(std::abs(one[1] - 1.0) < 1e-15);

    CircuitSpec bell(2);
    bell.h(0).cnot(0, 1);
    const auto b = run(bell);
    CHECK(std::abs(b[0] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(b[3] - std::sqrt(0.5)) < 1e-15);
    CHECK(std::abs(b[1]) < 1e-15);
    CHECK(std::abs(b[2]) < 1e-15);
}

TEST_CASE("apply_circuit leaves its input untouched and checks sizes") {
    const auto zero = Statevector::zero(2);
    CircuitSpec c(2);
    c.x(0);
    const auto out = qsim::apply_circuit(zero, c);
    CHECK(zero[0] == qsim::Complex(1.0, 0.0));
    // qubit 0 is the most significant bit
    CHECK(std::abs(out[2] - 1.0) < 1e-15);
    CHECK_THROWS_AS(qsim::apply_circuit(Statevector::zero(3), c), ValidationError);
}

TEST_CASE("statevector validation") {
    CHECK_THROWS_AS(Statevector::from_amplitudes({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(Statevector::from_amplitudes({1.0, 0.0, 0.0}), ValidationError);
    CHECK_NOTHROW(Statevector::from_amplitudes({std::sqrt(0.5), qsim::Complex(0.0, std::sqrt(0.5))}));
}

TEST_CASE("circuit unitaries match the Kronecker oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        CircuitSpec c = fixtures::random_circuit(n, 2, rng);
        c.append(fixtures::random_basis(n, rng));
        c.sdg(0);
        const auto u = qsim::circuit_unitary(c);
        const auto expected = oracle::unitary(c);
        CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("norm is preserved") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        CircuitSpec c = fixtures::random_circuit(n, 3, rng);
        c.append(fixtures::random_basis(n, rng));
        CHECK(std::abs(run(c).norm_squared() - 1.0) < 1e-10);
    }
}

TEST_CASE("expval_pauli examples") {
    const auto zero = Statevector::zero(1);
    CHECK(qsim::expval_pauli(zero, PauliString::parse("Z")) == doctest::Approx(1.0));
    CHECK(qsim::expval_pauli(zero, PauliString::parse("X")) == doctest::Approx(0.0));
    CircuitSpec bell(2);
    bell.h(0).cnot(0, 1);
    CHECK(qsim::expval_pauli(run(bell), PauliString::parse("ZZ")) == doctest::Approx(1.0));
    CHECK(qsim::expval_pauli(run(bell), PauliString::parse("YY")) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(qsim::expval_pauli(zero, PauliString::parse("ZZ")), ValidationError);
}

TEST_CASE("expval_pauli agrees with the dense oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(4);
        CircuitSpec c = fixtures::random_circuit(n, 2, rng);
        c.append(fixtures::random_basis(n, rng));
        const auto p = fixtures::random_pauli(n, rng.below(n + 1), rng);
        const auto psi = run(c);
        const double fast = qsim::expval_pauli(psi, p);
        Eigen::VectorXcd v = oracle::unitary(c) * oracle::zero_state(n);
        const double dense = (v.adjoint() * oracle::pauli(p) * v)(0, 0).real();
        CHECK(std::abs(fast - dense) < 1e-9);
        CHECK(std::abs(fast) <= 1.0 + 1e-12);
        const double via_dense =
            qsim::expval_dense(qsim::DensityOperator::from_pure(psi), qsim::pauli_matrix(p));
        CHECK(std::abs(via_dense - dense) < 1e-9);
    }
}

TEST_CASE("expval_dense examples and validation") {
    const auto rho0 = qsim::DensityOperator::from_pure(Statevector::zero(1));
    CHECK(qsim::expval_dense(rho0, oracle::single("Z")) == doctest::Approx(1.0));
    const auto mixed = qsim::DensityOperator::from_matrix(0.5 * qsim::Matrix::Identity(2, 2));
    qsim::Matrix traceless(2, 2);
    traceless << 0.3, qsim::Complex(0.2, -0.7), qsim::Complex(0.2, 0.7), -0.3;
    CHECK(std::abs(qsim::expval_dense(mixed, traceless)) < 1e-15);

    qsim::Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    CHECK_THROWS_AS(qsim::expval_dense(rho0, bad), ValidationError);
    CHECK_THROWS_AS(qsim::expval_dense(rho0, qsim::Matrix::Identity(4, 4)), ValidationError);
    CHECK_THROWS_AS(qsim::DensityOperator::from_matrix(qsim::Matrix::Identity(2, 2)), ValidationError);
    qsim::Matrix negative(2, 2);
    negative << 1.5, 0, 0, -0.5;
    CHECK_THROWS_AS(qsim::DensityOperator::from_matrix(negative), ValidationError);
}

TEST_CASE("expval_dense matches a dense product on random 2-qubit inputs") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(4, 4);
        Eigen::MatrixXcd rho = a * a.adjoint();
        rho /= rho.trace().real();
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Random(4, 4);
        Eigen::MatrixXcd obs = b + b.adjoint();
        double expected = 0.0;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                expected += (rho(i, j) * obs(j, i)).real();
            }
        }
        const auto r = qsim::DensityOperator::from_matrix(rho);
        CHECK(std::abs(qsim::expval_dense(r, obs) - expected) < 1e-12);
    }
}

TEST_CASE("deterministic sampling") {
    Rng rng(15);
    CircuitSpec one(1);
    one.x(0);
    CircuitSpec ten(2);
    ten.x(0);
    for (int i = 0; i < 100; ++i) {
        CHECK(qsim::sample_computational(run(one), rng) == "1");
        CHECK(qsim::sample_computational(run(ten), rng) == "10");
    }
}

TEST_CASE("Born frequencies for |+> and Y-basis |0>") {
    Rng rng(16);
    CircuitSpec plus(1);
    plus.h(0);
    const auto psi = run(plus);
    const int draws = 100000;
    int ones = 0;
    for (int i = 0; i < draws; ++i) {
        ones += qsim::sample_computational(psi, rng) == "1";
    }
    CHECK(std::abs(ones / double(draws) - 0.5) < 0.01);

    const std::vector<Pauli> y{Pauli::Y};
    const auto rotated = qsim::rotate_to_pauli_basis(Statevector::zero(1), y);
    const qsim::BornSampler sampler(rotated);
    ones = 0;
    for (int i = 0; i < draws; ++i) {
        ones += static_cast<int>(sampler(rng));
    }
    CHECK(std::abs(ones / double(draws) - 0.5) < 0.01);
}

TEST_CASE("basis rotation examples") {
    CircuitSpec plus(1);
    plus.h(0);
    const std::vector<Pauli> x{Pauli::X};
    const auto r = qsim::rotate_to_pauli_basis(run(plus), x);
    CHECK(std::abs(r[0] - 1.0) < 1e-15);
    const std::vector<Pauli> z{Pauli::Z};
    const auto s = qsim::rotate_to_pauli_basis(Statevector::zero(1), z);
    CHECK(s[0] == qsim::Complex(1.0, 0.0));
}

TEST_CASE("chi-square goodness of fit on random 3-qubit states") {
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        CircuitSpec c = fixtures::random_circuit(3, 2, rng);
        c.append(fixtures::random_basis(3, rng));
        const auto psi = run(c);
        const auto probs = psi.probabilities();
        std::vector<int> counts(8, 0);
        const int draws = 100000;
        for (int i = 0; i < draws; ++i) {
            ++counts[qsim::sample_index(psi, rng)];
        }
        double chi2 = 0.0;
        int df = -1;
        for (int k = 0; k < 8; ++k) {
            const double expected = probs[k] * draws;
            if (expected > 5.0) {
                chi2 += (counts[k] - expected) * (counts[k] - expected) / expected;
                ++df;
            }
        }
        // 0.001 critical values for df = 0..7
        const double critical[] = {0.0, 10.83, 13.82, 16.27, 18.47, 20.52, 22.46, 24.32};
        CHECK(chi2 < critical[std::max(df, 0)]);
    }
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
    Rng rng(18);
    const std::size_t n = 15;  // above the parallel threshold
    CircuitSpec c = fixtures::random_circuit(n, 2, rng);
    c.append(fixtures::random_basis(n, rng));
    const auto a = qsim::apply_circuit(Statevector::zero(n), c);
    const auto b = qsim::reference::apply_circuit(Statevector::zero(n), c);
    CHECK(a.amplitudes() == b.amplitudes());
    const auto p = fixtures::random_pauli(n, 5, rng);
    CHECK(qsim::expval_pauli(a, p) == qsim::reference::expval_pauli(b, p));
}
