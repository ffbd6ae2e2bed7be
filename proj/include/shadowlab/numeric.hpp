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

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "shadowlab/errors.hpp"

namespace shadowlab {

/// ceil() for sample-count formulas; values within 1e-9 (relative) of an
/// integer round to it so that e.g. 612 / 0.2^2 gives 15300, not 15301.
inline uint64_t ceil_count(double value) {
    require(std::isfinite(value) && value >= 0.0, "count must be finite and nonnegative");
    const double nearest = std::round(value);
    if (std::abs(value - nearest) <= 1e-9 * std::max(1.0, nearest)) {
        return static_cast<uint64_t>(nearest);
    }
    require(value < 1.8e19, "count overflows 64 bits");
    return static_cast<uint64_t>(std::ceil(value));
}

}  // namespace shadowlab
