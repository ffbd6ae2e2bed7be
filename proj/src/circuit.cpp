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


#include "shadowlab/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "shadowlab/errors.hpp"

namespace shadowlab {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::RY:
            return "ry";
        case GateKind::X:
            return "x";
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::CNOT:
            return "cnot";
    }
    return "?";
}

GateKind gate_from_name(std::string_view name) {
    for (GateKind kind : {GateKind::RY, GateKind::X, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::CNOT}) {
        if (gate_name(kind) == name) {
            return kind;
        }
    }
    throw ValidationError("unknown gate '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) { return kind == GateKind::CNOT ? 2 : 1; }

namespace {

void check_gate(const Gate &gate, std::size_t n) {
    require(gate.qubits[0] < n, "gate qubit index out of range");
    if (gate.kind == GateKind::CNOT) {
        require(gate.qubits[1] < n, "gate qubit index out of range");
        require(gate.qubits[0] != gate.qubits[1], "cnot control and target must differ");
    }
    require(std::isfinite(gate.angle), "gate angle must be finite");
}

Gate normalized(Gate gate) {
    if (gate.kind != GateKind::CNOT) {
        gate.qubits[1] = gate.qubits[0];
    }
    if (gate.kind != GateKind::RY) {
        gate.angle = 0.0;
    }
    return gate;
}

}  // namespace

CircuitSpec &CircuitSpec::add(const Gate &gate) {
    check_gate(gate, n_);
    gates_.push_back(normalized(gate));
    return *this;
}

CircuitSpec &CircuitSpec::append(const CircuitSpec &other) {
    require(other.n_ == n_, "cannot append circuits on different qubit counts");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

CircuitSpec CircuitSpec::inverse() const {
    CircuitSpec out(n_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        switch (g.kind) {
            case GateKind::RY:
                g.angle = -g.angle;
                break;
            case GateKind::S:
                g.kind = GateKind::Sdg;
                break;
            case GateKind::Sdg:
                g.kind = GateKind::S;
                break;
            default:
                break;
        }
        out.gates_.push_back(g);
    }
    return out;
}

CircuitTemplate &CircuitTemplate::add(const Gate &gate) {
    check_gate(gate, n_);
    gates_.push_back({normalized(gate), std::nullopt});
    return *this;
}

CircuitTemplate &CircuitTemplate::add_bound_ry(std::size_t q, AngleBinding binding) {
    Gate gate{GateKind::RY, {q, q}, 0.0};
    check_gate(gate, n_);
    require(std::isfinite(binding.scale) && std::isfinite(binding.offset), "angle binding must be finite");
    gates_.push_back({gate, binding});
    return *this;
}

std::size_t CircuitTemplate::input_dim() const {
    std::size_t dim = 0;
    for (const auto &g : gates_) {
        if (g.binding) {
            dim = std::max(dim, g.binding->input + 1);
        }
    }
    return dim;
}

CircuitSpec CircuitTemplate::bind(std::span<const double> x) const {
    require(x.size() >= input_dim(), "input vector too short for encoder");
    CircuitSpec out(n_);
    for (const auto &g : gates_) {
        Gate gate = g.gate;
        if (g.binding) {
            gate.angle = g.binding->scale * x[g.binding->input] + g.binding->offset;
        }
        out.add(gate);
    }
    return out;
}

}  // namespace shadowlab
