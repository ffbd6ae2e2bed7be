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


#pragma once

#include <cstddef>
#include <cstdint>
#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "shadowlab/model_types.hpp"
#include "shadowlab/qsim.hpp"
#include "shadowlab/rng.hpp"

namespace shadowlab {

/// Norms of O(theta) = sum_i w_i V O_i V^dagger.
struct NormLedger {
    /// ||O(theta)||_1 from the dense spectrum (n <= 10), else term_bound.
    double trace_norm = 0.0;
    /// ||O(theta)||_inf from the dense spectrum (n <= 10), else sum_i |w_i| max_j |lambda_ij|.
    double spectral_norm = 0.0;
    /// sum_i |w_i| * ||O_i||_1 with ||O_i||_1 = sum_j |lambda_ij|; always >= trace_norm.
    double term_bound = 0.0;
};

NormLedger term_norm_ledger(const ConventionalLinearModel &model);

/// Normalization alpha used by the flipped construction: the model's declared
/// trace-norm bound if present, else the term bound.
double flipping_normalization(const ConventionalLinearModel &model, const NormLedger &ledger);

/// Flipped form of a conventional model on n+1 qubits (ancilla = qubit 0):
///   rho' = p+ |0><0| (x) O+/||O+||_1 + p- |1><1| (x) O-/||O-||_1 + p0 I/2^(n+1)
///   O'(x) = alpha (|0><0| - |1><1|) (x) rho(x)
/// with p+- = ||O+-||_1 / alpha and p0 = 1 - p+ - p-.
class FlippedForm {
   public:
    double p_plus() const { return p_plus_; }
    double p_minus() const { return p_minus_; }
    double p_zero() const { return p_zero_; }
    double alpha() const { return alpha_; }
    const NormLedger &ledger() const { return ledger_; }
    std::size_t num_qubits() const { return model_->num_qubits() + 1; }

    qsim::DensityOperator state() const;
    qsim::Matrix observable(std::span<const double> x) const;
    /// Tr[rho' O'(x)]
    double evaluate(std::span<const double> x) const;

   private:
    friend FlippedForm flip_conventional(const ConventionalLinearModel &model);
    FlippedForm() = default;

    std::shared_ptr<const ConventionalLinearModel> model_;
    qsim::Matrix rho_plus_;
    qsim::Matrix rho_minus_;
    double p_plus_ = 0.0;
    double p_minus_ = 0.0;
    double p_zero_ = 0.0;
    double alpha_ = 0.0;
    NormLedger ledger_;
};

/// Requires n <= 9 so that the flipped state fits the dense limit.
FlippedForm flip_conventional(const ConventionalLinearModel &model);

/// ceil(8 * ||O||_1^2 * ln(2 / delta) / epsilon^2)
uint64_t algorithm1_iterations(double trace_norm, double epsilon, double delta);

struct Algorithm1Result {
    double estimate = 0.0;
    uint64_t iterations = 0;
    uint64_t seed = 0;
    uint64_t slack_iterations = 0;
    double alpha = 0.0;
};

/// Importance-sampled flipped evaluation of Tr[rho(x) O(theta)] for a fixed x.
///
/// Each iteration picks term i with probability |w_i| ||O_i||_1 / alpha (the
/// leftover mass is a slack branch that contributes 0), a sign branch b with
/// probability ||O_{i,b}||_1 / ||O_i||_1, an eigenindex j with probability
/// proportional to max(0, b lambda_ij), prepares V W_i |j>, applies U(x)^dagger
/// and measures outcome j'. The contribution is sign(w_i) b alpha rho0_{j'}.
class Algorithm1Sampler {
   public:
    /// Requires alpha >= term bound, where alpha is the declared trace-norm
    /// bound or, if none is declared, the term bound itself.
    Algorithm1Sampler(const ConventionalLinearModel &model, std::span<const double> x);

    double alpha() const { return alpha_; }
    double slack_probability() const { return slack_; }

    /// Runs iterations [0, N) with iteration t drawing from substream (seed, t).
    Algorithm1Result run(uint64_t iterations, uint64_t seed) const;
    Algorithm1Result run_serial(uint64_t iterations, uint64_t seed) const;

    /// Exact mean of one iteration's contribution, enumerated over the sampler's
    /// own probability tables.
    double exact_mean() const;

    /// Every contribution value an iteration can produce, including 0.
    std::vector<double> contribution_values() const;

    struct Outcome {
        bool slack = true;
        int sign = 0;               // sign(w_i) * b
        bool hit = false;           // j' lies in the support of rho_0
        std::size_t rho0_slot = 0;  // index into initial_state() when hit
    };
    Outcome draw(Rng &rng) const;

   private:
    template <bool Parallel>
    Algorithm1Result run_impl(uint64_t iterations, uint64_t seed) const;

    struct Branch {
        double probability = 0.0;           // given the term
        double norm = 0.0;                  // ||O_{i,b}||_1
        std::vector<std::size_t> indices;   // eigenindices j in this branch
        std::vector<double> index_probabilities;
        qsim::BornSampler index_sampler{std::span<const double>{}};
    };
    struct Term {
        int weight_sign = 0;
        CircuitSpec circuit{1};  // W_i, then V, then U(x)^dagger
        std::array<Branch, 2> branches;  // 0 = '+', 1 = '-'
        // Born distribution of the measured state per eigenindex, when tabulated.
        std::vector<std::optional<qsim::BornSampler>> outcomes;
    };

    qsim::Statevector measured_state(const Term &term, std::size_t j) const;
    uint64_t sample_outcome(const Term &term, std::size_t j, Rng &rng) const;

    std::size_t n_ = 0;
    double alpha_ = 0.0;
    double slack_ = 0.0;
    std::vector<Term> terms_;
    std::vector<double> term_probabilities_;  // last entry is the slack branch
    qsim::BornSampler term_sampler_{std::span<const double>{}};
    std::vector<double> rho0_;              // probabilities of the rho_0 support
    std::vector<int32_t> rho0_slot_;        // basis index -> slot, or -1
};

/// Runs `iterations` iterations seeded from `rng` and returns the estimate.
double algorithm1_eval(const ConventionalLinearModel &model, std::span<const double> x, uint64_t iterations,
                       Rng &rng);
Algorithm1Result algorithm1_run(const ConventionalLinearModel &model, std::span<const double> x,
                                uint64_t iterations, uint64_t seed);

namespace reference {
Algorithm1Result algorithm1_run(const ConventionalLinearModel &model, std::span<const double> x,
                                uint64_t iterations, uint64_t seed);
}

}  // namespace shadowlab
