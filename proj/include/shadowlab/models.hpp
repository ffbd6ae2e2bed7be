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

#include <cstdint>
#include <span>

#include "shadowlab/model_types.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/qsim.hpp"
#include "shadowlab/rng.hpp"

namespace shadowlab {

/// sum_j w_j(x) <P_j> on the exactly prepared statevector.
double eval_flipped_exact(const FlippedLinearModel &model, std::span<const double> x);

/// Same model through the dense route: Tr[rho(theta) O(x)] with O(x) assembled
/// as a 2^n x 2^n matrix. Used as an oracle for n <= 10.
double eval_flipped_dense(const FlippedLinearModel &model, std::span<const double> x);

/// Tr[rho(x) O(theta)] by dense algebra (n <= 10).
double eval_conventional_exact(const ConventionalLinearModel &model, std::span<const double> x);

qsim::Matrix conventional_observable(const ConventionalLinearModel &model);
qsim::DensityOperator conventional_state(const ConventionalLinearModel &model, std::span<const double> x);

struct SampledEstimate {
    double value = 0.0;
    uint64_t total_shots = 0;
    uint64_t shots_per_term = 0;
};

/// Estimates every <P_j> with a nonzero weight from eigenbasis measurements.
/// Each term gets required_samples(1, epsilon / B, delta / m) shots, so the
/// weighted total is within epsilon with probability at least 1 - delta.
SampledEstimate eval_flipped_sampled(const FlippedLinearModel &model, std::span<const double> x, double epsilon,
                                     double delta, Rng &rng);

namespace reference {
SampledEstimate eval_flipped_sampled(const FlippedLinearModel &model, std::span<const double> x, double epsilon,
                                     double delta, Rng &rng);
}

/// ceil(2 * norm^2 * ln(2 / delta) / epsilon^2): two-sided Hoeffding for a mean
/// of variables in [-norm, norm].
uint64_t required_samples(double spectral_norm, double epsilon, double delta);

}  // namespace shadowlab
