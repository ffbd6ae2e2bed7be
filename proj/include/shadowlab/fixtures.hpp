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

// Seeded random model generators shared by the CLI, tests, acceptance runs
// and benchmarks.

#include <cstddef>

#include "shadowlab/circuit.hpp"
#include "shadowlab/model_types.hpp"
#include "shadowlab/rng.hpp"

namespace shadowlab::fixtures {

/// `layers` rounds of RY on every qubit followed by a CNOT ladder.
CircuitSpec random_circuit(std::size_t n, std::size_t layers, Rng &rng);

/// Random basis change built from H, S, RY and CNOT.
CircuitSpec random_basis(std::size_t n, Rng &rng);

/// Uniformly random Pauli with exactly k non-identity letters.
PauliString random_pauli(std::size_t n, std::size_t k, Rng &rng);

/// m exactly-k-local Paulis on a random state, affine weights over [0, 1]^d
/// rescaled so that the bound B equals `bound`.
FlippedLinearModel random_flipped_model(std::size_t n, std::size_t m, std::size_t k, std::size_t d, double bound,
                                        Rng &rng);

/// RY(x_i) encoder on every qubit plus a CNOT ladder; `terms` observable terms
/// with weights in [-1, 1] and eigenvalues in [-1, 1]. rho_0 is a random
/// basis state when `pure`, else a random mixture of up to 3 basis states.
ConventionalLinearModel random_conventional_model(std::size_t n, std::size_t terms, bool pure, Rng &rng);

/// x_t = (t / (points - 1)) * (1, ..., 1) on [0, 1]^d.
std::vector<std::vector<double>> diagonal_grid(std::size_t d, std::size_t points);

/// Uniform point in [lo, hi]^d.
std::vector<double> random_point(std::size_t d, double lo, double hi, Rng &rng);

}  // namespace shadowlab::fixtures
