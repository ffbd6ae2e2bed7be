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

// Quantum half of the Pauli-shadow pipeline: producing snapshot records from
// a prepared state, plus the direct per-Pauli eigenbasis estimator.

#include <cstddef>
#include <cstdint>

#include "shadowlab/circuit.hpp"
#include "shadowlab/pauli.hpp"
#include "shadowlab/rng.hpp"
#include "shadowlab/shadow.hpp"

namespace shadowlab {

/// T snapshots of V|0..0>, each with uniformly random per-qubit bases. Snapshot
/// t draws from Rng::substream(master_seed, t), so the record depends only on
/// the master seed.
PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, uint64_t master_seed);

/// Draws the master seed from `rng`.
PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, Rng &rng);

/// Mean of the measured eigenvalue of p over `shots` eigenbasis measurements.
double estimate_pauli_direct(const CircuitSpec &state_prep, const PauliString &p, std::size_t shots, Rng &rng);

namespace reference {
PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, uint64_t master_seed);
}

}  // namespace shadowlab
