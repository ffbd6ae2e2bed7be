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

// Grover-style database model f_y(x) = Tr[rho(x) |y><y|] with the RY product
// encoding, in closed form, and the black-box corner search against it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/pauli.hpp"
#include "shadowlab/rng.hpp"
#include "shadowlab/weights.hpp"

namespace shadowlab::grover {

struct GroverModel {
    std::vector<uint8_t> y;  // y[i] is the bit of qubit i

    std::size_t num_qubits() const { return y.size(); }
    std::string str() const;
    static GroverModel parse(std::string_view bits);
    static GroverModel random(std::size_t n, Rng &rng);
};

/// prod_i cos^2(x_i)^(1 - y_i) sin^2(x_i)^(y_i)
double grover_eval(const GroverModel &model, std::span<const double> x);

/// Corner c of {0, pi/2}^n; qubit i takes bit (n-1-i) of c.
std::vector<double> corner(std::size_t n, uint64_t c);

/// The only interface a black-box searcher gets: expectation values at chosen
/// x, or one Bernoulli draw with success probability f_y(x). Counts queries.
class Oracle {
   public:
    explicit Oracle(GroverModel model) : model_(std::move(model)) {}
    std::size_t num_qubits() const { return model_.num_qubits(); }
    double expectation(std::span<const double> x);
    bool draw(std::span<const double> x, Rng &rng);
    uint64_t queries() const { return queries_; }

   private:
    GroverModel model_;
    uint64_t queries_ = 0;
};

enum class QueryMode { Expectation, Bernoulli };

QueryMode query_mode_from_name(std::string_view name);
std::string_view query_mode_name(QueryMode mode);

/// Queries corners in uniformly random order without replacement and returns
/// the number of queries up to and including the first success.
uint64_t blackbox_search(Oracle &oracle, QueryMode mode, Rng &rng);

/// One search per trial, trial t seeded from Rng::substream(master_seed, t).
std::vector<uint64_t> search_trials(const GroverModel &model, QueryMode mode, std::size_t trials,
                                    uint64_t master_seed);

/// Mean (2^n + 1) / 2 and variance (2^n - 1)(2^n + 1) / 12 of the query count.
double search_mean(std::size_t n);
double search_variance(std::size_t n);

/// Diagonal expansion f_y(x) = sum_S w_S(x) <y|Z_S|y> with
/// w_S(x) = prod_{i in S} cos(2 x_i) / 2^n over all subsets S. Term S has Z on
/// qubit i iff bit (n-1-i) of S is set. Bound 1.
class DiagonalWeights final : public WeightFamily {
   public:
    explicit DiagonalWeights(std::size_t n);

    std::size_t terms() const override { return std::size_t{1} << n_; }
    std::size_t input_dim() const override { return n_; }
    double bound() const override { return 1.0; }
    std::string kind() const override { return "grover_diagonal"; }
    nlohmann::json to_json() const override;

   protected:
    std::vector<double> compute(std::span<const double> x) const override;

   private:
    std::size_t n_;
};

inline constexpr std::size_t kMaxDiagonalQubits = 16;

std::vector<PauliString> diagonal_paulis(std::size_t n);

/// Adds "grover_diagonal" to the weight-family registry (idempotent).
void register_weight_family();

}  // namespace shadowlab::grover
