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

#include <array>
#include <cstdint>
#include <limits>

namespace shadowlab {

/// SplitMix64 step; used for seeding and for deriving substream keys.
constexpr uint64_t splitmix64(uint64_t &state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256** generator with explicit, portable derived distributions.
///
/// All randomness in the library flows through this type. Parallel loops never
/// share a generator: work item `i` draws from `Rng::substream(master, i)`, so
/// results do not depend on how iterations are scheduled across threads.
class Rng {
   public:
    using result_type = uint64_t;

    explicit Rng(uint64_t seed = 0) {
        uint64_t sm = seed;
        for (auto &word : state_) {
            word = splitmix64(sm);
        }
    }

    /// Independent stream keyed by (master, index).
    static Rng substream(uint64_t master, uint64_t index) {
        uint64_t mix = master ^ 0x6A09E667F3BCC909ULL;
        uint64_t a = splitmix64(mix);
        mix ^= index * 0xD1B54A32D192ED03ULL;
        uint64_t b = splitmix64(mix);
        return Rng(a ^ (b + 0x243F6A8885A308D3ULL));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }

    result_type next() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound) {
        // Lemire's nearly-divisionless method.
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<uint64_t>(m);
        if (low < bound) {
            const uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

    const std::array<uint64_t, 4> &state() const { return state_; }

   private:
    static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<uint64_t, 4> state_{};
};

}  // namespace shadowlab
