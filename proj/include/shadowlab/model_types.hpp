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
#include <optional>
#include <utility>
#include <vector>

#include "shadowlab/circuit.hpp"
#include "shadowlab/pauli.hpp"
#include "shadowlab/weights.hpp"

namespace shadowlab {

/// f(x) = Tr[rho(theta) O(x)] with rho(theta) = V(theta)|0..0><0..0|V(theta)^dagger
/// and O(x) = sum_j w_j(x) P_j.
class FlippedLinearModel {
   public:
    FlippedLinearModel(CircuitSpec state_prep, std::vector<PauliString> paulis, WeightFamilyPtr weights);

    std::size_t num_qubits() const { return state_prep_.num_qubits(); }
    const CircuitSpec &state_prep() const { return state_prep_; }
    const std::vector<PauliString> &paulis() const { return paulis_; }
    const WeightFamily &weights() const { return *weights_; }
    const WeightFamilyPtr &weights_ptr() const { return weights_; }
    std::size_t max_locality() const { return k_max_; }

   private:
    CircuitSpec state_prep_;
    std::vector<PauliString> paulis_;
    WeightFamilyPtr weights_;
    std::size_t k_max_ = 0;
};

/// One term w_i * V O_i V^dagger with O_i = sum_j lambda_j W|j><j|W^dagger.
struct ObservableTerm {
    double weight = 0.0;
    CircuitSpec basis;  // W_i
    std::vector<double> eigenvalues;
};

/// f(x) = Tr[U(x) rho_0 U(x)^dagger O(theta)], rho_0 diagonal in the computational
/// basis, O(theta) = sum_i w_i V O_i V^dagger.
class ConventionalLinearModel {
   public:
    ConventionalLinearModel(CircuitTemplate encoder, std::vector<std::pair<uint64_t, double>> initial_state,
                            CircuitSpec variational, std::vector<ObservableTerm> terms,
                            std::optional<double> trace_norm_bound = std::nullopt);

    std::size_t num_qubits() const { return variational_.num_qubits(); }
    const CircuitTemplate &encoder() const { return encoder_; }
    const std::vector<std::pair<uint64_t, double>> &initial_state() const { return initial_state_; }
    const CircuitSpec &variational() const { return variational_; }
    const std::vector<ObservableTerm> &terms() const { return terms_; }
    /// Declared upper bound on ||O(theta)||_1 used for normalization, if any.
    const std::optional<double> &trace_norm_bound() const { return trace_norm_bound_; }

    /// Diagonal of rho_0 as a dense 2^n vector.
    std::vector<double> initial_diagonal() const;

   private:
    CircuitTemplate encoder_;
    std::vector<std::pair<uint64_t, double>> initial_state_;
    CircuitSpec variational_;
    std::vector<ObservableTerm> terms_;
    std::optional<double> trace_norm_bound_;
};

}  // namespace shadowlab
