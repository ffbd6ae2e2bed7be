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


#include "shadowlab/shadow_collect.hpp"

#include <array>
#include <bit>
#include <optional>

#include "shadowlab/errors.hpp"
#include "shadowlab/qsim.hpp"

namespace shadowlab {

namespace {

// Small registers get all 3^n rotated Born distributions up front; larger ones
// rotate per snapshot. Both paths feed identical distributions to the sampler.
constexpr std::size_t kTabulateQubits = 6;

constexpr std::array<Pauli, 3> kBases = {Pauli::X, Pauli::Y, Pauli::Z};

class SnapshotSource {
   public:
    SnapshotSource(const CircuitSpec &state_prep)
        : n_(state_prep.num_qubits()),
          psi_(qsim::apply_circuit(qsim::Statevector::zero(state_prep.num_qubits()), state_prep)) {
        if (n_ <= kTabulateQubits) {
            std::size_t settings = 1;
            for (std::size_t q = 0; q < n_; ++q) {
                settings *= 3;
            }
            table_.reserve(settings);
            std::vector<Pauli> bases(n_);
            for (std::size_t code = 0; code < settings; ++code) {
                decode(code, bases);
                table_.emplace_back(qsim::rotate_to_pauli_basis(psi_, bases));
            }
        }
    }

    ShadowSnapshot draw(uint64_t master, std::size_t index) const {
        Rng rng = Rng::substream(master, index);
        std::vector<Pauli> bases(n_);
        std::size_t code = 0;
        for (std::size_t q = 0; q < n_; ++q) {
            const auto b = static_cast<std::size_t>(rng.below(3));
            bases[q] = kBases[b];
            code = code * 3 + b;
        }
        uint64_t outcome = 0;
        if (!table_.empty()) {
            outcome = table_[code](rng);
        } else {
            outcome = qsim::BornSampler(qsim::rotate_to_pauli_basis(psi_, bases))(rng);
        }
        ShadowSnapshot s;
        for (std::size_t q = 0; q < n_; ++q) {
            const uint64_t bit = uint64_t{1} << q;
            if (bases[q] == Pauli::X) {
                s.x_bases |= bit;
            } else if (bases[q] == Pauli::Y) {
                s.y_bases |= bit;
            }
            // Basis index bit (n-1-q) is qubit q.
            if ((outcome >> (n_ - 1 - q)) & 1) {
                s.outcomes |= bit;
            }
        }
        return s;
    }

   private:
    void decode(std::size_t code, std::vector<Pauli> &bases) const {
        for (std::size_t q = n_; q-- > 0;) {
            bases[q] = kBases[code % 3];
            code /= 3;
        }
    }

    std::size_t n_;
    qsim::Statevector psi_;
    std::vector<qsim::BornSampler> table_;
};

template <bool Parallel>
PauliShadow collect(const CircuitSpec &state_prep, std::size_t T, uint64_t master_seed) {
    require(T >= 1, "a shadow needs T >= 1 snapshots");
    require(state_prep.num_qubits() >= 1, "a shadow needs at least one qubit");
    const SnapshotSource source(state_prep);
    std::vector<ShadowSnapshot> snapshots(T);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(T); ++t) {
        snapshots[static_cast<std::size_t>(t)] = source.draw(master_seed, static_cast<std::size_t>(t));
    }
    return PauliShadow(state_prep.num_qubits(), master_seed, std::move(snapshots));
}

}  // namespace

PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, uint64_t master_seed) {
    return collect<true>(state_prep, T, master_seed);
}

PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, Rng &rng) {
    return collect_pauli_shadow(state_prep, T, rng.next());
}

namespace reference {
PauliShadow collect_pauli_shadow(const CircuitSpec &state_prep, std::size_t T, uint64_t master_seed) {
    return collect<false>(state_prep, T, master_seed);
}
}  // namespace reference

double estimate_pauli_direct(const CircuitSpec &state_prep, const PauliString &p, std::size_t shots, Rng &rng) {
    require(shots >= 1, "need at least one shot");
    require(p.num_qubits() == state_prep.num_qubits(), "Pauli and circuit qubit counts differ");
    const auto psi = qsim::apply_circuit(qsim::Statevector::zero(state_prep.num_qubits()), state_prep);
    const qsim::BornSampler sampler(qsim::rotate_to_pauli_basis(psi, p.letters()));
    const uint64_t support = p.flip_mask() | p.phase_mask();
    int64_t tally = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        tally += (std::popcount(sampler(rng) & support) & 1) ? -1 : 1;
    }
    return static_cast<double>(tally) / static_cast<double>(shots);
}

}  // namespace shadowlab
