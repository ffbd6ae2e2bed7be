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


#include "shadowlab/fixtures.hpp"

#include <algorithm>
#include <memory>
#include <numbers>
#include <numeric>

#include "shadowlab/errors.hpp"
#include "shadowlab/weights.hpp"

namespace shadowlab::fixtures {

namespace {

double uniform(double lo, double hi, Rng &rng) { return lo + (hi - lo) * rng.uniform(); }

void cnot_ladder(CircuitSpec &c) {
    for (std::size_t q = 0; q + 1 < c.num_qubits(); ++q) {
        c.cnot(q, q + 1);
    }
}

}  // namespace

CircuitSpec random_circuit(std::size_t n, std::size_t layers, Rng &rng) {
    CircuitSpec c(n);
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < n; ++q) {
            c.ry(q, uniform(0.0, 2.0 * std::numbers::pi, rng));
        }
        cnot_ladder(c);
    }
    return c;
}

CircuitSpec random_basis(std::size_t n, Rng &rng) {
    CircuitSpec c(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (rng.below(4)) {
            case 0:
                c.h(q);
                break;
            case 1:
                c.h(q).s(q);
                break;
            case 2:
                c.ry(q, uniform(0.0, std::numbers::pi, rng));
                break;
            default:
                break;
        }
    }
    if (n > 1 && rng.bernoulli(0.5)) {
        cnot_ladder(c);
    }
    return c;
}

PauliString random_pauli(std::size_t n, std::size_t k, Rng &rng) {
    require(k <= n, "locality exceeds qubit count");
    std::vector<std::size_t> qubits(n);
    std::iota(qubits.begin(), qubits.end(), std::size_t{0});
    std::string letters(n, 'I');
    for (std::size_t i = 0; i < k; ++i) {
        std::swap(qubits[i], qubits[i + rng.below(n - i)]);
        letters[qubits[i]] = "XYZ"[rng.below(3)];
    }
    return PauliString::parse(letters);
}

FlippedLinearModel random_flipped_model(std::size_t n, std::size_t m, std::size_t k, std::size_t d, double bound,
                                        Rng &rng) {
    require(bound > 0.0, "bound must be > 0");
    std::vector<PauliString> paulis;
    for (std::size_t j = 0; j < m; ++j) {
        paulis.push_back(random_pauli(n, k, rng));
    }
    std::vector<double> offset(m);
    std::vector<std::vector<double>> slope(m, std::vector<double>(d));
    for (std::size_t j = 0; j < m; ++j) {
        offset[j] = uniform(-1.0, 1.0, rng);
        for (auto &s : slope[j]) {
            s = uniform(-1.0, 1.0, rng);
        }
    }
    const std::vector<AffineWeights::Interval> domain(d, {0.0, 1.0});
    const double raw = AffineWeights(offset, slope, domain).bound();
    const double scale = raw > 0.0 ? bound / raw : 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        offset[j] *= scale;
        for (auto &s : slope[j]) {
            s *= scale;
        }
    }
    return FlippedLinearModel(random_circuit(n, 2, rng), std::move(paulis),
                              std::make_shared<AffineWeights>(offset, slope, domain));
}

ConventionalLinearModel random_conventional_model(std::size_t n, std::size_t terms, bool pure, Rng &rng) {
    CircuitTemplate encoder(n);
    for (std::size_t q = 0; q < n; ++q) {
        encoder.add_bound_ry(q, {q, 1.0, 0.0});
    }
    for (std::size_t q = 0; q + 1 < n; ++q) {
        encoder.add({GateKind::CNOT, {q, q + 1}, 0.0});
    }
    const uint64_t dim = uint64_t{1} << n;
    std::vector<std::pair<uint64_t, double>> initial;
    if (pure) {
        initial.emplace_back(rng.below(dim), 1.0);
    } else {
        const std::size_t count = std::min<uint64_t>(dim, 1 + rng.below(3));
        std::vector<uint64_t> idx(dim);
        std::iota(idx.begin(), idx.end(), uint64_t{0});
        double total = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            std::swap(idx[i], idx[i + rng.below(dim - i)]);
            const double p = uniform(0.1, 1.0, rng);
            initial.emplace_back(idx[i], p);
            total += p;
        }
        for (auto &entry : initial) {
            entry.second /= total;
        }
    }
    std::vector<ObservableTerm> obs;
    for (std::size_t i = 0; i < terms; ++i) {
        ObservableTerm t{uniform(-1.0, 1.0, rng), random_basis(n, rng), std::vector<double>(dim)};
        for (auto &lambda : t.eigenvalues) {
            lambda = uniform(-1.0, 1.0, rng);
        }
        obs.push_back(std::move(t));
    }
    return ConventionalLinearModel(std::move(encoder), std::move(initial), random_circuit(n, 1, rng), std::move(obs));
}

std::vector<std::vector<double>> diagonal_grid(std::size_t d, std::size_t points) {
    require(points >= 2, "a grid needs at least two points");
    std::vector<std::vector<double>> grid;
    for (std::size_t t = 0; t < points; ++t) {
        grid.emplace_back(d, static_cast<double>(t) / static_cast<double>(points - 1));
    }
    return grid;
}

std::vector<double> random_point(std::size_t d, double lo, double hi, Rng &rng) {
    std::vector<double> x(d);
    for (auto &v : x) {
        v = uniform(lo, hi, rng);
    }
    return x;
}

}  // namespace shadowlab::fixtures
