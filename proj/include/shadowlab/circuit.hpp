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
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shadowlab {

enum class GateKind { RY, X, H, S, Sdg, CNOT };

std::string_view gate_name(GateKind kind);
GateKind gate_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);

struct Gate {
    GateKind kind = GateKind::X;
    /// For CNOT, qubits[0] is the control and qubits[1] the target.
    std::array<std::size_t, 2> qubits{0, 0};
    /// Only meaningful for RY, where RY(angle) = exp(-i * angle * Y).
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

/// Ordered gate list on a fixed number of qubits.
class CircuitSpec {
   public:
    CircuitSpec() = default;
    explicit CircuitSpec(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }

    /// Appends a gate after checking qubit indices and angle finiteness.
    CircuitSpec &add(const Gate &gate);
    CircuitSpec &ry(std::size_t q, double angle) { return add({GateKind::RY, {q, q}, angle}); }
    CircuitSpec &x(std::size_t q) { return add({GateKind::X, {q, q}, 0.0}); }
    CircuitSpec &h(std::size_t q) { return add({GateKind::H, {q, q}, 0.0}); }
    CircuitSpec &s(std::size_t q) { return add({GateKind::S, {q, q}, 0.0}); }
    CircuitSpec &sdg(std::size_t q) { return add({GateKind::Sdg, {q, q}, 0.0}); }
    CircuitSpec &cnot(std::size_t control, std::size_t target) {
        return add({GateKind::CNOT, {control, target}, 0.0});
    }
    CircuitSpec &append(const CircuitSpec &other);

    /// The inverse circuit (reversed order, daggered gates).
    CircuitSpec inverse() const;

    bool operator==(const CircuitSpec &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<Gate> gates_;
};

/// angle = scale * x[input] + offset
struct AngleBinding {
    std::size_t input = 0;
    double scale = 1.0;
    double offset = 0.0;

    bool operator==(const AngleBinding &) const = default;
};

struct TemplateGate {
    Gate gate;
    std::optional<AngleBinding> binding;

    bool operator==(const TemplateGate &) const = default;
};

/// Data-dependent circuit U(x): RY gates may take their angle from the input
/// vector instead of a fixed value.
class CircuitTemplate {
   public:
    CircuitTemplate() = default;
    explicit CircuitTemplate(std::size_t n) : n_(n) {}

    std::size_t num_qubits() const { return n_; }
    const std::vector<TemplateGate> &gates() const { return gates_; }

    CircuitTemplate &add(const Gate &gate);
    CircuitTemplate &add_bound_ry(std::size_t q, AngleBinding binding);

    /// Smallest input dimension the template accepts.
    std::size_t input_dim() const;

    CircuitSpec bind(std::span<const double> x) const;

    bool operator==(const CircuitTemplate &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<TemplateGate> gates_;
};

}  // namespace shadowlab
