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


#include "shadowlab/shadow.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"

namespace shadowlab {

namespace {

struct PauliMasks {
    uint64_t x = 0;
    uint64_t y = 0;
    uint64_t z = 0;
    uint64_t support() const { return x | y | z; }
};

PauliMasks masks_of(const PauliString &p) {
    PauliMasks m;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        const uint64_t bit = uint64_t{1} << q;
        switch (p[q]) {
            case Pauli::X:
                m.x |= bit;
                break;
            case Pauli::Y:
                m.y |= bit;
                break;
            case Pauli::Z:
                m.z |= bit;
                break;
            case Pauli::I:
                break;
        }
    }
    return m;
}

// +1, -1 or 0 before the 3^k scale.
int snapshot_sign(const ShadowSnapshot &s, const PauliMasks &m) {
    const bool matches = (m.x & ~s.x_bases) == 0 && (m.y & ~s.y_bases) == 0 && (m.z & (s.x_bases | s.y_bases)) == 0;
    if (!matches) {
        return 0;
    }
    return (std::popcount(s.outcomes & m.support()) & 1) ? -1 : 1;
}

}  // namespace

Pauli ShadowSnapshot::basis(std::size_t q) const {
    if ((x_bases >> q) & 1) {
        return Pauli::X;
    }
    if ((y_bases >> q) & 1) {
        return Pauli::Y;
    }
    return Pauli::Z;
}

std::string ShadowSnapshot::bases_string(std::size_t n) const {
    std::string out(n, 'Z');
    for (std::size_t q = 0; q < n; ++q) {
        out[q] = pauli_char(basis(q));
    }
    return out;
}

std::string ShadowSnapshot::outcomes_string(std::size_t n) const {
    std::string out(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        out[q] = outcome(q) ? '1' : '0';
    }
    return out;
}

ShadowSnapshot ShadowSnapshot::from_strings(std::string_view bases, std::string_view outcomes) {
    require(bases.size() == outcomes.size(), "snapshot bases and outcomes must have equal length");
    require(bases.size() <= 64, "snapshots are limited to 64 qubits");
    ShadowSnapshot s;
    for (std::size_t q = 0; q < bases.size(); ++q) {
        const uint64_t bit = uint64_t{1} << q;
        switch (bases[q]) {
            case 'X':
                s.x_bases |= bit;
                break;
            case 'Y':
                s.y_bases |= bit;
                break;
            case 'Z':
                break;
            default:
                throw ValidationError(std::string("invalid snapshot basis '") + bases[q] + "'");
        }
        require(outcomes[q] == '0' || outcomes[q] == '1', "snapshot outcomes must be '0' or '1'");
        if (outcomes[q] == '1') {
            s.outcomes |= bit;
        }
    }
    return s;
}

PauliShadow::PauliShadow(std::size_t n, uint64_t master_seed, std::vector<ShadowSnapshot> snapshots)
    : n_(n), master_seed_(master_seed), snapshots_(std::move(snapshots)) {
    require(n_ >= 1 && n_ <= 64, "shadow qubit count must lie in [1, 64]");
    require(!snapshots_.empty(), "a shadow needs at least one snapshot");
    const uint64_t outside = n_ == 64 ? 0 : ~((uint64_t{1} << n_) - 1);
    for (const auto &s : snapshots_) {
        require(((s.x_bases | s.y_bases | s.outcomes) & outside) == 0, "snapshot touches qubits beyond n");
        require((s.x_bases & s.y_bases) == 0, "snapshot qubit measured in two bases");
    }
}

double single_snapshot_estimate(const ShadowSnapshot &snapshot, const PauliString &p) {
    const PauliMasks m = masks_of(p);
    return snapshot_sign(snapshot, m) * std::pow(3.0, static_cast<double>(p.locality()));
}

double estimate_pauli(const PauliShadow &shadow, const PauliString &p, const MoMConfig &cfg) {
    require(p.num_qubits() <= shadow.num_qubits(), "Pauli " + p.str() + " acts on more qubits than the shadow");
    const std::size_t T = shadow.size();
    require(cfg.groups >= 1 && cfg.groups <= T, "median-of-means group count must lie in [1, T]");
    const std::size_t k = p.locality();
    if (k == 0) {
        return 1.0;
    }
    const PauliMasks m = masks_of(p);
    const double scale = std::pow(3.0, static_cast<double>(k));
    const std::size_t K = cfg.groups;
    std::vector<double> means(K);
    const auto &snaps = shadow.snapshots();
    for (std::size_t g = 0; g < K; ++g) {
        const std::size_t begin = g * T / K;
        const std::size_t end = (g + 1) * T / K;
        int64_t tally = 0;
        for (std::size_t t = begin; t < end; ++t) {
            tally += snapshot_sign(snaps[t], m);
        }
        means[g] = scale * static_cast<double>(tally) / static_cast<double>(end - begin);
    }
    const std::size_t mid = (K - 1) / 2;
    std::nth_element(means.begin(), means.begin() + static_cast<std::ptrdiff_t>(mid), means.end());
    return means[mid];
}

ShadowModel::ShadowModel(const PauliShadow &shadow, const FlippedLinearModel &model, const MoMConfig &cfg)
    : weights_(model.weights_ptr()) {
    require(model.num_qubits() == shadow.num_qubits(), "shadow and model qubit counts differ");
    estimates_.reserve(model.paulis().size());
    for (const auto &p : model.paulis()) {
        estimates_.push_back(estimate_pauli(shadow, p, cfg));
    }
}

double ShadowModel::operator()(std::span<const double> x) const {
    const std::vector<double> w = weights_->evaluate(x);
    double total = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        total += w[j] * estimates_[j];
    }
    return total;
}

double shadow_model_eval(const PauliShadow &shadow, const FlippedLinearModel &model, std::span<const double> x,
                         const MoMConfig &cfg) {
    return ShadowModel(shadow, model, cfg)(x);
}

ShadowBound shadow_sample_bound(std::size_t k, double B, double epsilon, double delta, std::size_t m) {
    require(std::isfinite(B) && B >= 0.0, "B must be >= 0");
    require(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
    require(delta > 0.0 && delta < 1.0, "delta must lie in (0, 1)");
    require(m >= 1, "m must be >= 1");
    require(k <= 40, "locality too large for a sample bound");
    ShadowBound bound;
    bound.groups = std::max<uint64_t>(1, ceil_count(2.0 * std::log(2.0 * static_cast<double>(m) / delta)));
    bound.per_group = ceil_count(68.0 * std::pow(3.0, static_cast<double>(k)) * B * B / (epsilon * epsilon));
    bound.total = std::max(bound.groups * bound.per_group, bound.groups);
    return bound;
}

}  // namespace shadowlab
