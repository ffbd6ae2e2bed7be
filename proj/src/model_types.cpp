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


#include "shadowlab/model_types.hpp"

#include <algorithm>
#include <cmath>

#include "shadowlab/errors.hpp"

namespace shadowlab {

FlippedLinearModel::FlippedLinearModel(CircuitSpec state_prep, std::vector<PauliString> paulis,
                                       WeightFamilyPtr weights)
    : state_prep_(std::move(state_prep)), paulis_(std::move(paulis)), weights_(std::move(weights)) {
    require(weights_ != nullptr, "flipped model needs a weight family");
    require(weights_->terms() == paulis_.size(), "weight family term count must equal the number of Paulis");
    for (const auto &p : paulis_) {
        require(p.num_qubits() == state_prep_.num_qubits(), "Pauli " + p.str() + " has the wrong qubit count");
        k_max_ = std::max(k_max_, p.locality());
    }
}

ConventionalLinearModel::ConventionalLinearModel(CircuitTemplate encoder,
                                                 std::vector<std::pair<uint64_t, double>> initial_state,
                                                 CircuitSpec variational, std::vector<ObservableTerm> terms,
                                                 std::optional<double> trace_norm_bound)
    : encoder_(std::move(encoder)),
      initial_state_(std::move(initial_state)),
      variational_(std::move(variational)),
      terms_(std::move(terms)),
      trace_norm_bound_(trace_norm_bound) {
    const std::size_t n = variational_.num_qubits();
    require(n <= 62, "conventional models are limited to 62 qubits");
    require(encoder_.num_qubits() == n, "encoder and variational circuit qubit counts differ");
    const uint64_t dim = uint64_t{1} << n;
    double total = 0.0;
    for (const auto &[index, prob] : initial_state_) {
        require(index < dim, "initial-state basis index out of range");
        require(std::isfinite(prob) && prob >= 0.0, "initial-state probabilities must be nonnegative");
        total += prob;
    }
    require(std::abs(total - 1.0) <= 1e-9, "initial-state probabilities must sum to 1");
    for (const auto &term : terms_) {
        require(std::isfinite(term.weight), "term weights must be finite");
        require(term.basis.num_qubits() == n, "term basis circuit qubit count differs");
        require(term.eigenvalues.size() == dim, "each term needs 2^n eigenvalues");
        for (double lambda : term.eigenvalues) {
            require(std::isfinite(lambda), "eigenvalues must be finite");
        }
    }
    if (trace_norm_bound_) {
        require(std::isfinite(*trace_norm_bound_) && *trace_norm_bound_ >= 0.0, "trace-norm bound must be >= 0");
    }
}

std::vector<double> ConventionalLinearModel::initial_diagonal() const {
    std::vector<double> diag(std::size_t{1} << num_qubits(), 0.0);
    for (const auto &[index, prob] : initial_state_) {
        diag[index] += prob;
    }
    return diag;
}

}  // namespace shadowlab
