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

// Discrete cube root learning task over Z_N for N = p q with p, q = 2 mod 3.
// Integers are 64-bit; products go through unsigned __int128.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "shadowlab/rng.hpp"

namespace shadowlab::dcr {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);
/// a^-1 mod m by the extended Euclidean algorithm; throws if gcd(a, m) != 1.
uint64_t invmod(uint64_t a, uint64_t m);
/// Miller-Rabin with 40 bases drawn from a generator seeded by n.
bool is_probable_prime(uint64_t n);

struct Modulus {
    uint64_t p = 0;
    uint64_t q = 0;
    uint64_t N = 0;
    uint64_t phi = 0;
    uint64_t d = 0;
    unsigned n_bits = 0;
};

/// Validates the primes and derives N, phi and d.
Modulus modulus_from_primes(uint64_t p, uint64_t q);
/// N with exactly n_bits bits, 8 <= n_bits <= 64.
Modulus generate_modulus(unsigned n_bits, Rng &rng);

uint64_t cube(uint64_t y, const Modulus &m);
uint64_t cube_root(uint64_t x, const Modulus &m);

/// 1 iff (v - s) mod N <= (N - 1) / 2.
int in_window(uint64_t v, uint64_t s, uint64_t N);

struct Concept {
    Modulus modulus;
    uint64_t s = 0;
};

int concept_label(uint64_t x, const Concept &c);

struct LabeledSample {
    uint64_t x = 0;
    int label = 0;
    bool operator==(const LabeledSample &) const = default;
};

/// Sample t draws y uniformly from Rng::substream(master_seed, t) and emits
/// (y^3 mod N, [y in window]); the trapdoor is never used.
std::vector<LabeledSample> generate_dataset(const Concept &c, std::size_t M, uint64_t master_seed);
std::vector<LabeledSample> generate_dataset(const Concept &c, std::size_t M, Rng &rng);

struct Hypothesis {
    uint64_t d_prime = 0;
    uint64_t s_prime = 0;
    uint64_t N = 0;
};

int hypothesis_eval(const Hypothesis &h, uint64_t x);

/// ceil(ln(delta) / ln(1 - 2 epsilon)), at least 1.
std::size_t required_training_size(double epsilon, double delta);

struct LearnResult {
    Hypothesis hypothesis;
    uint64_t p = 0;  // factors found by the classical stand-in for quantum factoring
    uint64_t q = 0;
    std::size_t training_loss = 0;
    std::size_t candidates = 0;
};

/// Factors N, inverts 3 mod phi and picks s' among the roots of the training
/// points by training loss (ties to the smallest s').
LearnResult quantum_learn(std::span<const LabeledSample> dataset, uint64_t N, double epsilon, double delta);

/// Fraction of samples on which h disagrees with the label.
double hypothesis_error(const Hypothesis &h, std::span<const LabeledSample> samples);

/// Pollard-rho (Brent) with a trial-division fallback. Returns (p, q), p <= q,
/// both probable primes.
std::pair<uint64_t, uint64_t> factor_semiprime(uint64_t N);

struct BaselineReport {
    double threshold_accuracy = 0.0;
    double perceptron_accuracy = 0.0;
    double knn_accuracy = 0.0;
    std::size_t train_size = 0;
    std::size_t heldout_size = 0;
    double best() const;
};

/// Classical learners that see only N and the samples:
///  (a) best wrapped threshold on x with either polarity,
///  (b) averaged perceptron on the bits of x plus a bias,
///  (c) 5-nearest neighbours under cyclic distance on Z_N.
BaselineReport classical_baseline(std::span<const LabeledSample> train, std::span<const LabeledSample> heldout,
                                  uint64_t N);

inline constexpr int kPerceptronEpochs = 20;
inline constexpr std::size_t kNeighbours = 5;

}  // namespace shadowlab::dcr
