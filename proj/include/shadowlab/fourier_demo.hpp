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

// Head-to-head for the Grover-style model: black-box corner search against a
// single computational-basis measurement of the prepared |y>.

#include <cstddef>
#include <cstdint>
#include <span>

#include "shadowlab/grover.hpp"
#include "shadowlab/model_types.hpp"
#include "shadowlab/rng.hpp"

namespace shadowlab::grover {

/// X gates on the qubits with y_i = 1.
CircuitSpec preparation_circuit(const GroverModel &model);

/// The same model as a Pauli-weighted flipped model (state |y>, Z_S terms).
FlippedLinearModel as_flipped_model(const GroverModel &model);

/// Classical evaluator recovered from one measurement of |y>.
class ShadowEvaluator {
   public:
    explicit ShadowEvaluator(GroverModel recovered) : recovered_(std::move(recovered)) {}
    const GroverModel &recovered() const { return recovered_; }
    std::size_t measurements() const { return 1; }
    double operator()(std::span<const double> x) const { return grover_eval(recovered_, x); }

   private:
    GroverModel recovered_;
};

ShadowEvaluator flipped_shadow_recover(const GroverModel &model, Rng &rng);

}  // namespace shadowlab::grover
