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


#include "shadowlab/flipper.hpp"

#include <algorithm>
#include <cmath>
#include <Eigen/Eigenvalues>

#include "shadowlab/errors.hpp"
#include "shadowlab/models.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

using qsim::Matrix;

namespace {

double l1(const std::vector<double> &v) {
    double total = 0.0;
    for (double x : v) {
        total += std::abs(x);
    }
    return total;
}

// Slack for comparing a normalization against a computed norm.
bool at_least(double alpha, double norm) { return alpha >= norm - 1e-9 * std::max(1.0, norm); }

// Tables with more than this many amplitudes in total are simulated per draw.
constexpr std::size_t kTabulateAmplitudes = std::size_t{1} << 22;

}  // namespace

NormLedger term_norm_ledger(const ConventionalLinearModel &model) {
    NormLedger ledger;
    double spectral_bound = 0.0;
    for (const auto &term : model.terms()) {
        ledger.term_bound += std::abs(term.weight) * l1(term.eigenvalues);
        double top = 0.0;
        for (double lambda : term.eigenvalues) {
            top = std::max(top, std::abs(lambda));
        }
        spectral_bound += std::abs(term.weight) * top;
    }
    if (model.num_qubits() <= qsim::kMaxDenseQubits) {
        const Eigen::SelfAdjointEigenSolver<Matrix> solver(conventional_observable(model), Eigen::EigenvaluesOnly);
        const Eigen::VectorXd &ev = solver.eigenvalues();
        ledger.trace_norm = ev.cwiseAbs().sum();
        ledger.spectral_norm = ev.cwiseAbs().maxCoeff();
    } else {
        ledger.trace_norm = ledger.term_bound;
        ledger.spectral_norm = spectral_bound;
    }
    return ledger;
}

double flipping_normalization(const ConventionalLinearModel &model, const NormLedger &ledger) {
    return model.trace_norm_bound().value_or(ledger.term_bound);
}

// ---------------------------------------------------------------------------
// Dense flip

FlippedForm flip_conventional(const ConventionalLinearModel &model) {
    const std::size_t n = model.num_qubits();
    require(n + 1 <= qsim::kMaxDenseQubits, "the dense flip is limited to 9 data qubits");
    FlippedForm f;
    f.model_ = std::make_shared<const ConventionalLinearModel>(model);
    f.ledger_ = term_norm_ledger(model);
    f.alpha_ = flipping_normalization(model, f.ledger_);
    require(std::isfinite(f.alpha_) && f.alpha_ >= 0.0, "trace-norm bound must be finite and >= 0");
    require(at_least(f.alpha_, f.ledger_.trace_norm), "declared trace-norm bound is below ||O(theta)||_1");

    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(conventional_observable(model));
    const Eigen::VectorXd &ev = solver.eigenvalues();
    const Matrix &vecs = solver.eigenvectors();
    Eigen::VectorXd pos = ev.cwiseMax(0.0);
    Eigen::VectorXd neg = (-ev).cwiseMax(0.0);
    const double norm_plus = pos.sum();
    const double norm_minus = neg.sum();

    auto part = [&](const Eigen::VectorXd &d, double norm) -> Matrix {
        if (norm <= 0.0) {
            return Matrix::Zero(dim, dim);
        }
        Matrix m = vecs * (d / norm).cast<qsim::Complex>().asDiagonal() * vecs.adjoint();
        return 0.5 * (m + m.adjoint());
    };
    f.rho_plus_ = part(pos, norm_plus);
    f.rho_minus_ = part(neg, norm_minus);
    if (f.alpha_ > 0.0) {
        f.p_plus_ = norm_plus / f.alpha_;
        f.p_minus_ = norm_minus / f.alpha_;
    }
    f.p_zero_ = std::max(0.0, 1.0 - f.p_plus_ - f.p_minus_);
    ensure(f.p_plus_ >= 0.0 && f.p_minus_ >= 0.0 && f.p_plus_ + f.p_minus_ <= 1.0 + 1e-9,
           "flipped mixture weights out of range");
    return f;
}

qsim::DensityOperator FlippedForm::state() const {
    const auto dim = rho_plus_.rows();
    Matrix rho = Matrix::Zero(2 * dim, 2 * dim);
    rho.topLeftCorner(dim, dim) = p_plus_ * rho_plus_;
    rho.bottomRightCorner(dim, dim) = p_minus_ * rho_minus_;
    rho.diagonal().array() += p_zero_ / static_cast<double>(2 * dim);
    return qsim::DensityOperator::from_matrix(std::move(rho));
}

Matrix FlippedForm::observable(std::span<const double> x) const {
    const Matrix rho_x = conventional_state(*model_, x).matrix();
    const auto dim = rho_x.rows();
    Matrix obs = Matrix::Zero(2 * dim, 2 * dim);
    obs.topLeftCorner(dim, dim) = alpha_ * rho_x;
    obs.bottomRightCorner(dim, dim) = -alpha_ * rho_x;
    return obs;
}

double FlippedForm::evaluate(std::span<const double> x) const { return qsim::expval_dense(state(), observable(x)); }

uint64_t algorithm1_iterations(double trace_norm, double epsilon, double delta) {
    require(std::isfinite(trace_norm) && trace_norm >= 0.0, "trace norm must be >= 0");
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    return std::max<uint64_t>(1, ceil_count(8.0 * trace_norm * trace_norm * std::log(2.0 / delta) /
                                            (epsilon * epsilon)));
}

// ---------------------------------------------------------------------------
// Algorithm 1

Algorithm1Sampler::Algorithm1Sampler(const ConventionalLinearModel &model, std::span<const double> x)
    : n_(model.num_qubits()) {
    require(n_ <= qsim::kMaxStatevectorQubits, "sampled evaluation is limited to 22 qubits");
    require(x.size() >= model.encoder().input_dim(), "input vector too short for encoder");
    double term_bound = 0.0;
    for (const auto &term : model.terms()) {
        term_bound += std::abs(term.weight) * l1(term.eigenvalues);
    }
    alpha_ = model.trace_norm_bound().value_or(term_bound);
    require(std::isfinite(alpha_) && alpha_ >= 0.0, "trace-norm bound must be finite and >= 0");
    require(at_least(alpha_, term_bound),
            "sampled evaluation needs a normalization of at least sum_i |w_i| ||O_i||_1");

    const std::size_t dim = std::size_t{1} << n_;
    rho0_slot_.assign(dim, -1);
    for (const auto &[index, p] : model.initial_state()) {
        rho0_slot_[index] = static_cast<int32_t>(rho0_.size());
        rho0_.push_back(p);
    }

    const CircuitSpec unprep = model.encoder().bind(x).inverse();
    double covered = 0.0;
    for (const auto &src : model.terms()) {
        const double norm = l1(src.eigenvalues);
        if (src.weight == 0.0 || norm == 0.0) {
            continue;
        }
        Term term;
        term.weight_sign = src.weight > 0.0 ? 1 : -1;
        term.circuit = src.basis;
        term.circuit.append(model.variational()).append(unprep);
        for (int b = 0; b < 2; ++b) {
            Branch &branch = term.branches[static_cast<std::size_t>(b)];
            const double sign = b == 0 ? 1.0 : -1.0;
            for (std::size_t j = 0; j < src.eigenvalues.size(); ++j) {
                const double v = sign * src.eigenvalues[j];
                if (v > 0.0) {
                    branch.indices.push_back(j);
                    branch.index_probabilities.push_back(v);
                    branch.norm += v;
                }
            }
            for (double &p : branch.index_probabilities) {
                p /= branch.norm;
            }
            branch.probability = branch.norm / norm;
            branch.index_sampler = qsim::BornSampler(branch.index_probabilities);
        }
        const double q = std::abs(src.weight) * norm / (alpha_ > 0.0 ? alpha_ : 1.0);
        covered += q;
        term_probabilities_.push_back(q);
        terms_.push_back(std::move(term));
    }
    slack_ = std::max(0.0, 1.0 - covered);
    term_probabilities_.push_back(slack_);
    term_sampler_ = qsim::BornSampler(term_probabilities_);

    std::size_t entries = 0;
    for (const auto &term : terms_) {
        entries += term.branches[0].indices.size() + term.branches[1].indices.size();
    }
    if (entries * dim <= kTabulateAmplitudes) {
        for (auto &term : terms_) {
            term.outcomes.resize(dim);
            for (const auto &branch : term.branches) {
                for (std::size_t j : branch.indices) {
                    term.outcomes[j].emplace(measured_state(term, j));
                }
            }
        }
    }
}

qsim::Statevector Algorithm1Sampler::measured_state(const Term &term, std::size_t j) const {
    return qsim::apply_circuit(qsim::Statevector::basis(n_, j), term.circuit);
}

uint64_t Algorithm1Sampler::sample_outcome(const Term &term, std::size_t j, Rng &rng) const {
    if (!term.outcomes.empty()) {
        return (*term.outcomes[j])(rng);
    }
    return qsim::BornSampler(measured_state(term, j))(rng);
}

Algorithm1Sampler::Outcome Algorithm1Sampler::draw(Rng &rng) const {
    Outcome out;
    const auto i = static_cast<std::size_t>(term_sampler_(rng));
    if (i >= terms_.size()) {
        return out;
    }
    const Term &term = terms_[i];
    const bool positive = rng.bernoulli(term.branches[0].probability);
    const Branch &branch = term.branches[positive ? 0 : 1];
    const std::size_t j = branch.indices[static_cast<std::size_t>(branch.index_sampler(rng))];
    const uint64_t outcome = sample_outcome(term, j, rng);
    out.slack = false;
    out.sign = term.weight_sign * (positive ? 1 : -1);
    const int32_t slot = rho0_slot_[outcome];
    if (slot >= 0) {
        out.hit = true;
        out.rho0_slot = static_cast<std::size_t>(slot);
    }
    return out;
}

template <bool Parallel>
Algorithm1Result Algorithm1Sampler::run_impl(uint64_t iterations, uint64_t seed) const {
    require(iterations >= 1, "need at least one iteration");
    // net[slot] = (#positive hits) - (#negative hits); integer sums make the
    // result independent of thread count and scheduling.
    std::vector<int64_t> net(rho0_.size(), 0);
    int64_t slack = 0;
    const auto total = static_cast<int64_t>(iterations);
#pragma omp parallel if (Parallel)
    {
        std::vector<int64_t> local(rho0_.size(), 0);
        int64_t local_slack = 0;
#pragma omp for schedule(static)
        for (int64_t t = 0; t < total; ++t) {
            Rng rng = Rng::substream(seed, static_cast<uint64_t>(t));
            const Outcome o = draw(rng);
            if (o.slack) {
                ++local_slack;
            } else if (o.hit) {
                local[o.rho0_slot] += o.sign;
            }
        }
#pragma omp critical
        {
            for (std::size_t s = 0; s < net.size(); ++s) {
                net[s] += local[s];
            }
            slack += local_slack;
        }
    }
    Algorithm1Result r;
    r.iterations = iterations;
    r.seed = seed;
    r.alpha = alpha_;
    r.slack_iterations = static_cast<uint64_t>(slack);
    double sum = 0.0;
    for (std::size_t s = 0; s < net.size(); ++s) {
        sum += static_cast<double>(net[s]) * rho0_[s];
    }
    r.estimate = alpha_ * sum / static_cast<double>(iterations);
    return r;
}

Algorithm1Result Algorithm1Sampler::run(uint64_t iterations, uint64_t seed) const {
    return run_impl<true>(iterations, seed);
}

Algorithm1Result Algorithm1Sampler::run_serial(uint64_t iterations, uint64_t seed) const {
    return run_impl<false>(iterations, seed);
}

double Algorithm1Sampler::exact_mean() const {
    double mean = 0.0;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term &term = terms_[i];
        for (std::size_t b = 0; b < 2; ++b) {
            const Branch &branch = term.branches[b];
            const double sign = term.weight_sign * (b == 0 ? 1.0 : -1.0);
            for (std::size_t k = 0; k < branch.indices.size(); ++k) {
                const auto probs = measured_state(term, branch.indices[k]).probabilities();
                double hit = 0.0;
                for (std::size_t jp = 0; jp < probs.size(); ++jp) {
                    if (rho0_slot_[jp] >= 0) {
                        hit += probs[jp] * rho0_[static_cast<std::size_t>(rho0_slot_[jp])];
                    }
                }
                mean += term_probabilities_[i] * branch.probability * branch.index_probabilities[k] * sign *
                        alpha_ * hit;
            }
        }
    }
    return mean;
}

std::vector<double> Algorithm1Sampler::contribution_values() const {
    std::vector<double> values{0.0};
    for (double p : rho0_) {
        values.push_back(alpha_ * p);
        values.push_back(-alpha_ * p);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Algorithm1Result algorithm1_run(const ConventionalLinearModel &model, std::span<const double> x,
                                uint64_t iterations, uint64_t seed) {
    return Algorithm1Sampler(model, x).run(iterations, seed);
}

double algorithm1_eval(const ConventionalLinearModel &model, std::span<const double> x, uint64_t iterations,
                       Rng &rng) {
    return algorithm1_run(model, x, iterations, rng.next()).estimate;
}

namespace reference {
Algorithm1Result algorithm1_run(const ConventionalLinearModel &model, std::span<const double> x,
                                uint64_t iterations, uint64_t seed) {
    return Algorithm1Sampler(model, x).run_serial(iterations, seed);
}
}  // namespace reference

}  // namespace shadowlab
