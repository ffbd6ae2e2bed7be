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


#include "shadowlab/grover.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "shadowlab/errors.hpp"

namespace shadowlab::grover {

std::string GroverModel::str() const {
    std::string out(y.size(), '0');
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = y[i] ? '1' : '0';
    }
    return out;
}

GroverModel GroverModel::parse(std::string_view bits) {
    require(!bits.empty(), "hidden string must be nonempty");
    GroverModel m;
    for (char c : bits) {
        require(c == '0' || c == '1', "hidden string must contain only '0' and '1'");
        m.y.push_back(c == '1' ? 1 : 0);
    }
    return m;
}

GroverModel GroverModel::random(std::size_t n, Rng &rng) {
    require(n >= 1 && n <= 63, "hidden string length must lie in [1, 63]");
    GroverModel m;
    m.y.resize(n);
    for (auto &b : m.y) {
        b = static_cast<uint8_t>(rng.below(2));
    }
    return m;
}

double grover_eval(const GroverModel &model, std::span<const double> x) {
    require(x.size() == model.num_qubits(), "input dimension must equal n");
    double value = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double c = std::cos(x[i]);
        const double s = std::sin(x[i]);
        value *= model.y[i] ? s * s : c * c;
    }
    return value;
}

std::vector<double> corner(std::size_t n, uint64_t c) {
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if ((c >> (n - 1 - i)) & 1) {
            x[i] = std::numbers::pi / 2;
        }
    }
    return x;
}

double Oracle::expectation(std::span<const double> x) {
    ++queries_;
    return grover_eval(model_, x);
}

bool Oracle::draw(std::span<const double> x, Rng &rng) {
    ++queries_;
    return rng.bernoulli(grover_eval(model_, x));
}

QueryMode query_mode_from_name(std::string_view name) {
    if (name == "expectation") {
        return QueryMode::Expectation;
    }
    if (name == "bernoulli") {
        return QueryMode::Bernoulli;
    }
    throw ValidationError("query mode must be 'expectation' or 'bernoulli'");
}

std::string_view query_mode_name(QueryMode mode) {
    return mode == QueryMode::Expectation ? "expectation" : "bernoulli";
}

uint64_t blackbox_search(Oracle &oracle, QueryMode mode, Rng &rng) {
    const std::size_t n = oracle.num_qubits();
    require(n >= 1 && n <= 30, "black-box search supports 1 to 30 qubits");
    const uint64_t total = uint64_t{1} << n;
    const uint64_t start = oracle.queries();
    // Incremental Fisher-Yates: step k fixes position k of a uniform permutation.
    std::vector<uint64_t> order(total);
    std::iota(order.begin(), order.end(), uint64_t{0});
    for (uint64_t k = 0; k < total; ++k) {
        std::swap(order[k], order[k + rng.below(total - k)]);
        const auto x = corner(n, order[k]);
        const bool hit = mode == QueryMode::Expectation ? oracle.expectation(x) > 0.5 : oracle.draw(x, rng);
        if (hit) {
            return oracle.queries() - start;
        }
    }
    throw PropertyViolation("black-box search exhausted every corner without a hit");
}

std::vector<uint64_t> search_trials(const GroverModel &model, QueryMode mode, std::size_t trials,
                                    uint64_t master_seed) {
    require(trials >= 1, "need at least one trial");
    std::vector<uint64_t> counts(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
        Rng rng = Rng::substream(master_seed, static_cast<uint64_t>(t));
        Oracle oracle(model);
        counts[static_cast<std::size_t>(t)] = blackbox_search(oracle, mode, rng);
    }
    return counts;
}

double search_mean(std::size_t n) { return (std::ldexp(1.0, static_cast<int>(n)) + 1.0) / 2.0; }

double search_variance(std::size_t n) {
    const double size = std::ldexp(1.0, static_cast<int>(n));
    return (size - 1.0) * (size + 1.0) / 12.0;
}

DiagonalWeights::DiagonalWeights(std::size_t n) : n_(n) {
    require(n >= 1 && n <= kMaxDiagonalQubits, "grover_diagonal supports 1 to 16 qubits");
}

nlohmann::json DiagonalWeights::to_json() const { return {{"type", kind()}, {"n", n_}}; }

std::vector<double> DiagonalWeights::compute(std::span<const double> x) const {
    std::vector<double> w{1.0 / static_cast<double>(terms())};
    // Appending qubit i doubles the table: new bit 0 = I, new bit 1 = Z.
    w.reserve(terms());
    for (std::size_t i = 0; i < n_; ++i) {
        const double c = std::cos(2.0 * x[i]);
        const std::size_t size = w.size();
        w.resize(2 * size);
        for (std::size_t S = size; S-- > 0;) {
            w[2 * S + 1] = w[S] * c;
            w[2 * S] = w[S];
        }
    }
    return w;
}

std::vector<PauliString> diagonal_paulis(std::size_t n) {
    require(n >= 1 && n <= kMaxDiagonalQubits, "grover_diagonal supports 1 to 16 qubits");
    std::vector<PauliString> out;
    out.reserve(std::size_t{1} << n);
    std::string letters(n, 'I');
    for (uint64_t S = 0; S < (uint64_t{1} << n); ++S) {
        for (std::size_t i = 0; i < n; ++i) {
            letters[i] = ((S >> (n - 1 - i)) & 1) ? 'Z' : 'I';
        }
        out.push_back(PauliString::parse(letters));
    }
    return out;
}

void register_weight_family() {
    WeightFamilyRegistry::instance().add("grover_diagonal", [](const nlohmann::json &j) -> WeightFamilyPtr {
        return std::make_shared<DiagonalWeights>(j.at("n").get<std::size_t>());
    });
}

}  // namespace shadowlab::grover
