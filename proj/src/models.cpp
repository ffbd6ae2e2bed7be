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


#include "shadowlab/models.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

using qsim::Complex;
using qsim::Matrix;

uint64_t required_samples(double spectral_norm, double epsilon, double delta) {
    require(std::isfinite(spectral_norm) && spectral_norm >= 0.0, "spectral norm must be >= 0");
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    return ceil_count(2.0 * spectral_norm * spectral_norm * std::log(2.0 / delta) / (epsilon * epsilon));
}

double eval_flipped_exact(const FlippedLinearModel &model, std::span<const double> x) {
    const std::vector<double> w = model.weights().evaluate(x);
    const qsim::Statevector psi = qsim::apply_circuit(qsim::Statevector::zero(model.num_qubits()), model.state_prep());
    double total = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] != 0.0) {
            total += w[j] * qsim::expval_pauli(psi, model.paulis()[j]);
        }
    }
    ensure(std::abs(total) <= model.weights().bound() + 1e-9, "flipped model value exceeds its bound B");
    return total;
}

double eval_flipped_dense(const FlippedLinearModel &model, std::span<const double> x) {
    require(model.num_qubits() <= qsim::kMaxDenseQubits, "dense evaluation is limited to 10 qubits");
    const std::vector<double> w = model.weights().evaluate(x);
    const std::size_t dim = std::size_t{1} << model.num_qubits();
    Matrix obs = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < w.size(); ++j) {
        obs += w[j] * qsim::pauli_matrix(model.paulis()[j]);
    }
    const auto rho = qsim::DensityOperator::from_pure(
        qsim::apply_circuit(qsim::Statevector::zero(model.num_qubits()), model.state_prep()));
    return qsim::expval_dense(rho, obs);
}

Matrix conventional_observable(const ConventionalLinearModel &model) {
    const std::size_t n = model.num_qubits();
    require(n <= qsim::kMaxDenseQubits, "dense conventional evaluation is limited to 10 qubits");
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    const Matrix v = qsim::circuit_unitary(model.variational());
    Matrix obs = Matrix::Zero(dim, dim);
    for (const auto &term : model.terms()) {
        const Matrix vw = v * qsim::circuit_unitary(term.basis);
        Eigen::VectorXcd lambda(dim);
        for (Eigen::Index j = 0; j < dim; ++j) {
            lambda(j) = term.eigenvalues[static_cast<std::size_t>(j)];
        }
        obs += term.weight * (vw * lambda.asDiagonal() * vw.adjoint());
    }
    // Symmetrize away rounding so downstream Hermiticity checks are exact.
    return 0.5 * (obs + obs.adjoint());
}

qsim::DensityOperator conventional_state(const ConventionalLinearModel &model, std::span<const double> x) {
    const std::size_t n = model.num_qubits();
    require(n <= qsim::kMaxDenseQubits, "dense conventional evaluation is limited to 10 qubits");
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    const Matrix u = qsim::circuit_unitary(model.encoder().bind(x));
    Eigen::VectorXcd diag(dim);
    const auto rho0 = model.initial_diagonal();
    for (Eigen::Index j = 0; j < dim; ++j) {
        diag(j) = rho0[static_cast<std::size_t>(j)];
    }
    Matrix rho = u * diag.asDiagonal() * u.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    return qsim::DensityOperator::from_matrix(std::move(rho));
}

double eval_conventional_exact(const ConventionalLinearModel &model, std::span<const double> x) {
    require(x.size() >= model.encoder().input_dim(), "input vector too short for encoder");
    return qsim::expval_dense(conventional_state(model, x), conventional_observable(model));
}

namespace {

struct TermPlan {
    std::vector<double> weights;
    uint64_t shots = 0;
    uint64_t master = 0;
};

TermPlan plan_sampling(const FlippedLinearModel &model, std::span<const double> x, double epsilon, double delta,
                       Rng &rng) {
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    TermPlan plan;
    plan.weights = model.weights().evaluate(x);
    plan.master = rng.next();
    const double bound = model.weights().bound();
    const std::size_t m = plan.weights.size();
    if (bound > 0.0 && m > 0) {
        plan.shots = required_samples(1.0, epsilon / bound, delta / static_cast<double>(m));
    }
    return plan;
}

int64_t term_tally(const qsim::Statevector &psi, const PauliString &p, uint64_t shots, uint64_t master,
                   std::size_t term) {
    Rng rng = Rng::substream(master, term);
    const qsim::BornSampler sampler(qsim::rotate_to_pauli_basis(psi, p.letters()));
    const uint64_t support_mask = p.flip_mask() | p.phase_mask();
    int64_t tally = 0;
    for (uint64_t s = 0; s < shots; ++s) {
        tally += (std::popcount(sampler(rng) & support_mask) & 1) ? -1 : 1;
    }
    return tally;
}

SampledEstimate finish(const TermPlan &plan, const std::vector<int64_t> &tallies) {
    SampledEstimate out;
    out.shots_per_term = plan.shots;
    for (std::size_t j = 0; j < plan.weights.size(); ++j) {
        if (plan.weights[j] != 0.0 && plan.shots > 0) {
            out.value += plan.weights[j] * static_cast<double>(tallies[j]) / static_cast<double>(plan.shots);
            out.total_shots += plan.shots;
        }
    }
    return out;
}

template <bool Parallel>
SampledEstimate sampled_impl(const FlippedLinearModel &model, std::span<const double> x, double epsilon,
                             double delta, Rng &rng) {
    const TermPlan plan = plan_sampling(model, x, epsilon, delta, rng);
    const std::size_t m = plan.weights.size();
    std::vector<int64_t> tallies(m, 0);
    if (plan.shots == 0) {
        return finish(plan, tallies);
    }
    const qsim::Statevector psi = qsim::apply_circuit(qsim::Statevector::zero(model.num_qubits()), model.state_prep());
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(m); ++j) {
        const auto term = static_cast<std::size_t>(j);
        if (plan.weights[term] != 0.0) {
            tallies[term] = term_tally(psi, model.paulis()[term], plan.shots, plan.master, term);
        }
    }
    return finish(plan, tallies);
}

}  // namespace

SampledEstimate eval_flipped_sampled(const FlippedLinearModel &model, std::span<const double> x, double epsilon,
                                     double delta, Rng &rng) {
    return sampled_impl<true>(model, x, epsilon, delta, rng);
}

namespace reference {
SampledEstimate eval_flipped_sampled(const FlippedLinearModel &model, std::span<const double> x, double epsilon,
                                     double delta, Rng &rng) {
    return sampled_impl<false>(model, x, epsilon, delta, rng);
}
}  // namespace reference

}  // namespace shadowlab
