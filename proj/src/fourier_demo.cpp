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


#include "shadowlab/fourier_demo.hpp"

#include <memory>

#include "shadowlab/qsim.hpp"

namespace shadowlab::grover {

CircuitSpec preparation_circuit(const GroverModel &model) {
    CircuitSpec c(model.num_qubits());
    for (std::size_t i = 0; i < model.num_qubits(); ++i) {
        if (model.y[i]) {
            c.x(i);
        }
    }
    return c;
}

FlippedLinearModel as_flipped_model(const GroverModel &model) {
    const std::size_t n = model.num_qubits();
    return FlippedLinearModel(preparation_circuit(model), diagonal_paulis(n), std::make_shared<DiagonalWeights>(n));
}

ShadowEvaluator flipped_shadow_recover(const GroverModel &model, Rng &rng) {
    const auto psi = qsim::apply_circuit(qsim::Statevector::zero(model.num_qubits()), preparation_circuit(model));
    return ShadowEvaluator(GroverModel::parse(qsim::sample_computational(psi, rng)));
}

}  // namespace shadowlab::grover
