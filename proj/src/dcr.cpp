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


#include "shadowlab/dcr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab::dcr {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>(u128{a} * b % m); }

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    require(m >= 1, "modulus must be >= 1");
    uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    require(m >= 2, "modulus must be >= 2");
    __int128 old_r = a % m, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 quotient = old_r / r;
        std::swap(old_r, r);
        r -= quotient * old_r;
        std::swap(old_s, s);
        s -= quotient * old_s;
    }
    require(old_r == 1, std::to_string(a) + " is not invertible mod " + std::to_string(m));
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) {
        inv += m;
    }
    return static_cast<uint64_t>(inv);
}

bool is_probable_prime(uint64_t n) {
    static constexpr uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) {
        return false;
    }
    for (uint64_t p : kSmall) {
        if (n % p == 0) {
            return n == p;
        }
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    Rng rng(n ^ 0x6D696C6C65727261ULL);
    for (int round = 0; round < 40; ++round) {
        const uint64_t a = 2 + rng.below(n - 3);
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

Modulus modulus_from_primes(uint64_t p, uint64_t q) {
    require(p != q, "p and q must differ");
    for (uint64_t f : {p, q}) {
        require(f > 2 && is_probable_prime(f), std::to_string(f) + " is not an odd prime");
        require(f % 3 == 2, std::to_string(f) + " is not 2 mod 3");
    }
    const u128 product = u128{p} * q;
    require(product <= UINT64_MAX, "p * q exceeds 64 bits");
    Modulus m;
    m.p = std::min(p, q);
    m.q = std::max(p, q);
    m.N = static_cast<uint64_t>(product);
    m.phi = (p - 1) * (q - 1);
    m.d = invmod(3, m.phi);
    m.n_bits = static_cast<unsigned>(std::bit_width(m.N));
    ensure(mulmod(3, m.d, m.phi) == 1, "trapdoor key fails 3 d = 1 mod phi");
    return m;
}

namespace {

// Random prime = 5 mod 6 in [lo, hi], or 0 after the retry budget.
uint64_t random_prime_2mod3(uint64_t lo, uint64_t hi, Rng &rng) {
    constexpr int kTries = 4096;
    for (int t = 0; t < kTries; ++t) {
        uint64_t c = lo + rng.below(hi - lo + 1);
        c = c - c % 6 + 5;
        if (c < lo || c > hi || c < 5) {
            continue;
        }
        if (is_probable_prime(c)) {
            return c;
        }
    }
    return 0;
}

}  // namespace

Modulus generate_modulus(unsigned n_bits, Rng &rng) {
    require(n_bits >= 8 && n_bits <= 64, "modulus size must lie in [8, 64] bits");
    const unsigned p_bits = (n_bits + 1) / 2;
    const uint64_t p_lo = uint64_t{1} << (p_bits - 1);
    const uint64_t p_hi = static_cast<uint64_t>((u128{1} << p_bits) - 1);
    const u128 n_lo = u128{1} << (n_bits - 1);
    const u128 n_hi = (u128{1} << n_bits) - 1;
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const uint64_t p = random_prime_2mod3(p_lo, p_hi, rng);
        if (p == 0) {
            continue;
        }
        const auto q_lo = static_cast<uint64_t>((n_lo + p - 1) / p);
        const auto q_hi = static_cast<uint64_t>(n_hi / p);
        if (q_lo > q_hi) {
            continue;
        }
        const uint64_t q = random_prime_2mod3(q_lo, q_hi, rng);
        if (q == 0 || q == p) {
            continue;
        }
        Modulus m = modulus_from_primes(p, q);
        ensure(m.n_bits == n_bits, "generated modulus has the wrong bit length");
        return m;
    }
    throw PropertyViolation("prime search exhausted for a " + std::to_string(n_bits) + "-bit modulus");
}

uint64_t cube(uint64_t y, const Modulus &m) {
    require(y < m.N, "cube input must lie in Z_N");
    return powmod(y, 3, m.N);
}

uint64_t cube_root(uint64_t x, const Modulus &m) {
    require(x < m.N, "cube_root input must lie in Z_N");
    return powmod(x, m.d, m.N);
}

int in_window(uint64_t v, uint64_t s, uint64_t N) {
    const uint64_t diff = v >= s ? v - s : v + (N - s);
    return diff <= (N - 1) / 2 ? 1 : 0;
}

int concept_label(uint64_t x, const Concept &c) { return in_window(cube_root(x, c.modulus), c.s, c.modulus.N); }

std::vector<LabeledSample> generate_dataset(const Concept &c, std::size_t M, uint64_t master_seed) {
    require(M >= 1, "dataset size must be >= 1");
    require(c.s < c.modulus.N, "threshold must lie in Z_N");
    std::vector<LabeledSample> out(M);
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(M); ++t) {
        Rng rng = Rng::substream(master_seed, static_cast<uint64_t>(t));
        const uint64_t y = rng.below(c.modulus.N);
        out[static_cast<std::size_t>(t)] = {powmod(y, 3, c.modulus.N), in_window(y, c.s, c.modulus.N)};
    }
    return out;
}

std::vector<LabeledSample> generate_dataset(const Concept &c, std::size_t M, Rng &rng) {
    return generate_dataset(c, M, rng.next());
}

int hypothesis_eval(const Hypothesis &h, uint64_t x) {
    require(x < h.N, "hypothesis input must lie in Z_N");
    return in_window(powmod(x, h.d_prime, h.N), h.s_prime, h.N);
}

std::size_t required_training_size(double epsilon, double delta) {
    require(epsilon > 0.0 && epsilon < 0.5, "epsilon must lie in (0, 1/2)");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    return std::max<std::size_t>(1, ceil_count(std::log(delta) / std::log(1.0 - 2.0 * epsilon)));
}

std::pair<uint64_t, uint64_t> factor_semiprime(uint64_t N) {
    require(N >= 4, "N is too small to be a semiprime");
    auto finish = [N](uint64_t f) -> std::pair<uint64_t, uint64_t> {
        const uint64_t g = N / f;
        require(is_probable_prime(f) && is_probable_prime(g), std::to_string(N) + " is not a semiprime");
        return {std::min(f, g), std::max(f, g)};
    };
    if (N % 2 == 0) {
        return finish(2);
    }
    require(!is_probable_prime(N), std::to_string(N) + " is prime, not a semiprime");
    if (N < (uint64_t{1} << 32)) {
        for (uint64_t f = 3; f * f <= N; f += 2) {
            if (N % f == 0) {
                return finish(f);
            }
        }
        throw ValidationError(std::to_string(N) + " is not a semiprime");
    }
    // Brent's variant of Pollard rho, several increments.
    constexpr uint64_t kIterations = uint64_t{1} << 24;
    for (uint64_t c = 1; c <= 32; ++c) {
        auto f = [&](uint64_t v) { return static_cast<uint64_t>((u128{mulmod(v, v, N)} + c) % N); };
        uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
        const uint64_t m = 128;
        for (uint64_t r = 1; g == 1 && r < kIterations; r <<= 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            for (uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, N);
                }
                g = std::gcd(q, N);
            }
        }
        if (g == N) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, N);
            } while (g == 1);
        }
        if (g != 1 && g != N) {
            return finish(g);
        }
    }
    for (uint64_t f = 3; f < (uint64_t{1} << 24) && f * f <= N; f += 2) {
        if (N % f == 0) {
            return finish(f);
        }
    }
    throw ValidationError("could not factor " + std::to_string(N) + " within the iteration budget");
}

LearnResult quantum_learn(std::span<const LabeledSample> dataset, uint64_t N, double epsilon, double delta) {
    require(!dataset.empty(), "training set is empty");
    require(dataset.size() >= required_training_size(epsilon, delta),
            "training set smaller than required_training_size(epsilon, delta)");
    for (const auto &s : dataset) {
        require(s.x < N, "training point outside Z_N");
        require(s.label == 0 || s.label == 1, "labels must be 0 or 1");
    }
    LearnResult r;
    std::tie(r.p, r.q) = factor_semiprime(N);
    require(r.p != r.q && r.p % 3 == 2 && r.q % 3 == 2, "N is not a product of distinct primes = 2 mod 3");
    const uint64_t phi = (r.p - 1) * (r.q - 1);
    const uint64_t d = invmod(3, phi);
    ensure(mulmod(3, d, phi) == 1, "recovered key fails 3 d' = 1 mod phi");

    std::vector<uint64_t> roots(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        roots[i] = powmod(dataset[i].x, d, N);
    }
    std::vector<uint64_t> candidates = roots;
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::size_t> loss(candidates.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(candidates.size()); ++c) {
        const uint64_t s = candidates[static_cast<std::size_t>(c)];
        std::size_t errors = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            errors += in_window(roots[i], s, N) != dataset[i].label ? 1 : 0;
        }
        loss[static_cast<std::size_t>(c)] = errors;
    }
    // Candidates are sorted, so the first minimum is the smallest s'.
    const auto best = static_cast<std::size_t>(std::min_element(loss.begin(), loss.end()) - loss.begin());
    r.hypothesis = {d, candidates[best], N};
    r.training_loss = loss[best];
    r.candidates = candidates.size();
    return r;
}

double hypothesis_error(const Hypothesis &h, std::span<const LabeledSample> samples) {
    require(!samples.empty(), "no samples to score");
    std::size_t wrong = 0;
    for (const auto &s : samples) {
        wrong += hypothesis_eval(h, s.x) != s.label ? 1 : 0;
    }
    return static_cast<double>(wrong) / static_cast<double>(samples.size());
}

// ---------------------------------------------------------------------------
// Baselines

double BaselineReport::best() const { return std::max({threshold_accuracy, perceptron_accuracy, knn_accuracy}); }

namespace {

double accuracy(std::span<const LabeledSample> samples, auto &&predict) {
    if (samples.empty()) {
        return 0.0;
    }
    std::size_t right = 0;
    for (const auto &s : samples) {
        right += predict(s.x) == s.label ? 1 : 0;
    }
    return static_cast<double>(right) / static_cast<double>(samples.size());
}

double threshold_baseline(std::span<const LabeledSample> train, std::span<const LabeledSample> heldout, uint64_t N) {
    std::vector<uint64_t> cuts{0};
    for (const auto &s : train) {
        cuts.push_back(s.x);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::size_t best_errors = SIZE_MAX;
    uint64_t best_cut = 0;
    int best_flip = 0;
    for (uint64_t t : cuts) {
        std::size_t errors = 0;
        for (const auto &s : train) {
            errors += in_window(s.x, t, N) != s.label ? 1 : 0;
        }
        // The flipped polarity makes train.size() - errors mistakes.
        const std::size_t flipped = train.size() - errors;
        if (errors < best_errors) {
            best_errors = errors;
            best_cut = t;
            best_flip = 0;
        }
        if (flipped < best_errors) {
            best_errors = flipped;
            best_cut = t;
            best_flip = 1;
        }
    }
    return accuracy(heldout, [&](uint64_t x) { return in_window(x, best_cut, N) ^ best_flip; });
}

double perceptron_baseline(std::span<const LabeledSample> train, std::span<const LabeledSample> heldout,
                           uint64_t N) {
    const auto bits = static_cast<std::size_t>(std::bit_width(N - 1));
    const std::size_t dim = bits + 1;
    auto features = [&](uint64_t x, std::vector<double> &f) {
        for (std::size_t k = 0; k < bits; ++k) {
            f[k] = ((x >> k) & 1) ? 1.0 : -1.0;
        }
        f[bits] = 1.0;
    };
    std::vector<double> w(dim, 0.0), sum(dim, 0.0), f(dim);
    for (int epoch = 0; epoch < kPerceptronEpochs; ++epoch) {
        for (const auto &s : train) {
            features(s.x, f);
            const double y = s.label ? 1.0 : -1.0;
            double score = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                score += w[k] * f[k];
            }
            if (y * score <= 0.0) {
                for (std::size_t k = 0; k < dim; ++k) {
                    w[k] += y * f[k];
                }
            }
            for (std::size_t k = 0; k < dim; ++k) {
                sum[k] += w[k];
            }
        }
    }
    return accuracy(heldout, [&](uint64_t x) {
        features(x, f);
        double score = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            score += sum[k] * f[k];
        }
        return score >= 0.0 ? 1 : 0;
    });
}

double knn_baseline(std::span<const LabeledSample> train, std::span<const LabeledSample> heldout, uint64_t N) {
    if (train.empty()) {
        return accuracy(heldout, [](uint64_t) { return 0; });
    }
    std::vector<LabeledSample> sorted(train.begin(), train.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.x < b.x; });
    const std::size_t M = sorted.size();
    const std::size_t k = std::min(kNeighbours, M);
    auto cyclic = [N](uint64_t a, uint64_t b) {
        const uint64_t d = a > b ? a - b : b - a;
        return std::min(d, N - d);
    };
    return accuracy(heldout, [&](uint64_t x) {
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), x, [](const auto &s, uint64_t v) { return s.x < v; }) -
            sorted.begin());
        // Walk outward from the insertion point in both directions, wrapping.
        std::size_t right = pos % M;
        std::size_t left = (pos + M - 1) % M;
        int votes = 0;
        for (std::size_t taken = 0; taken < k; ++taken) {
            const bool take_left = left != right && cyclic(sorted[left].x, x) < cyclic(sorted[right].x, x);
            std::size_t idx;
            if (take_left) {
                idx = left;
                left = (left + M - 1) % M;
            } else {
                idx = right;
                right = (right + 1) % M;
            }
            votes += sorted[idx].label ? 1 : -1;
        }
        return votes > 0 ? 1 : 0;
    });
}

}  // namespace

BaselineReport classical_baseline(std::span<const LabeledSample> train, std::span<const LabeledSample> heldout,
                                  uint64_t N) {
    require(N >= 2, "N must be >= 2");
    for (const auto &s : train) {
        require(s.x < N, "training point outside Z_N");
    }
    for (const auto &s : heldout) {
        require(s.x < N, "held-out point outside Z_N");
    }
    BaselineReport r;
    r.train_size = train.size();
    r.heldout_size = heldout.size();
    r.threshold_accuracy = threshold_baseline(train, heldout, N);
    r.perceptron_accuracy = perceptron_baseline(train, heldout, N);
    r.knn_accuracy = knn_baseline(train, heldout, N);
    return r;
}

}  // namespace shadowlab::dcr
