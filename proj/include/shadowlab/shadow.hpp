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

// Classical half of the Pauli-shadow pipeline: snapshot records, the
// inverse-channel estimators and the shadow model. Nothing here simulates a
// quantum state; the library target that compiles this file does not link the
// simulator.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shadowlab/model_types.hpp"
#include "shadowlab/pauli.hpp"

namespace shadowlab {

/// One randomized Pauli measurement: per-qubit basis and outcome bit. Bit q of
/// each mask refers to qubit q. Qubits in neither basis mask were measured in Z.
struct ShadowSnapshot {
    uint64_t x_bases = 0;
    uint64_t y_bases = 0;
    uint64_t outcomes = 0;

    Pauli basis(std::size_t q) const;
    int outcome(std::size_t q) const { return static_cast<int>((outcomes >> q) & 1); }

    std::string bases_string(std::size_t n) const;
    std::string outcomes_string(std::size_t n) const;
    static ShadowSnapshot from_strings(std::string_view bases, std::string_view outcomes);

    bool operator==(const ShadowSnapshot &) const = default;
};

class PauliShadow {
   public:
    PauliShadow(std::size_t n, uint64_t master_seed, std::vector<ShadowSnapshot> snapshots);

    std::size_t num_qubits() const { return n_; }
    uint64_t master_seed() const { return master_seed_; }
    const std::vector<ShadowSnapshot> &snapshots() const { return snapshots_; }
    std::size_t size() const { return snapshots_.size(); }

    bool operator==(const PauliShadow &) const = default;

   private:
    std::size_t n_;
    uint64_t master_seed_;
    std::vector<ShadowSnapshot> snapshots_;
};

/// Median-of-means with `groups` contiguous groups of near-equal size.
struct MoMConfig {
    std::size_t groups = 1;
};

/// Single-snapshot inverse-channel estimate of <P>: prod_q 3 * s_q on the
/// support when every support qubit was measured in P's basis, else 0.
double single_snapshot_estimate(const ShadowSnapshot &snapshot, const PauliString &p);

/// Median over cfg.groups of the group means of single-snapshot estimates.
/// Even group counts resolve to the lower middle value.
double estimate_pauli(const PauliShadow &shadow, const PauliString &p, const MoMConfig &cfg);

/// Classical surrogate of a flipped model: Pauli expectations are estimated
/// once from the shadow; evaluation at x is then a weighted sum.
class ShadowModel {
   public:
    ShadowModel(const PauliShadow &shadow, const FlippedLinearModel &model, const MoMConfig &cfg);

    double operator()(std::span<const double> x) const;
    const std::vector<double> &pauli_estimates() const { return estimates_; }

   private:
    WeightFamilyPtr weights_;
    std::vector<double> estimates_;
};

double shadow_model_eval(const PauliShadow &shadow, const FlippedLinearModel &model, std::span<const double> x,
                         const MoMConfig &cfg);

struct ShadowBound {
    uint64_t total = 0;      // T
    uint64_t groups = 0;     // K
    uint64_t per_group = 0;  // ceil(68 * 3^k * B^2 / eps^2)
};

/// K = ceil(2 ln(2m / delta)), per-group size ceil(68 * 3^k * B^2 / eps^2) and
/// T = max(K * per_group, K).
ShadowBound shadow_sample_bound(std::size_t k, double B, double epsilon, double delta, std::size_t m);

}  // namespace shadowlab
