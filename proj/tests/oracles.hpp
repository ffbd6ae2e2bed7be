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

// Independent reference computations used only by the tests. Each one builds
// its answer a different way from the library: gates as explicit Kronecker
// products, Algorithm 1 by enumerating every branch, modular arithmetic by
// brute force.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "shadowlab/circuit.hpp"
#include "shadowlab/model_types.hpp"
#include "shadowlab/pauli.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Matrix single(const char *name, double angle = 0.0) {
    Matrix m(2, 2);
    const Complex i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    const std::string s(name);
    if (s == "I") {
        m << 1, 0, 0, 1;
    } else if (s == "X") {
        m << 0, 1, 1, 0;
    } else if (s == "Y") {
        m << 0, -i, i, 0;
    } else if (s == "Z") {
        m << 1, 0, 0, -1;
    } else if (s == "H") {
        m << r, r, r, -r;
    } else if (s == "S") {
        m << 1, 0, 0, i;
    } else if (s == "Sdg") {
        m << 1, 0, 0, -i;
    } else if (s == "RY") {
        // exp(-i angle Y)
        m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
    } else {
        throw std::invalid_argument("unknown gate " + s);
    }
    return m;
}

// Qubit 0 is the leftmost Kronecker factor.
inline Matrix embed(std::size_t n, const std::vector<std::pair<std::size_t, Matrix>> &factors) {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < n; ++q) {
        Matrix f = single("I");
        for (const auto &[target, m] : factors) {
            if (target == q) {
                f = m;
            }
        }
        out = kron(out, f);
    }
    return out;
}

inline Matrix gate_matrix(std::size_t n, const shadowlab::Gate &g) {
    using shadowlab::GateKind;
    switch (g.kind) {
        case GateKind::RY:
            return embed(n, {{g.qubits[0], single("RY", g.angle)}});
        case GateKind::X:
            return embed(n, {{g.qubits[0], single("X")}});
        case GateKind::H:
            return embed(n, {{g.qubits[0], single("H")}});
        case GateKind::S:
            return embed(n, {{g.qubits[0], single("S")}});
        case GateKind::Sdg:
            return embed(n, {{g.qubits[0], single("Sdg")}});
        case GateKind::CNOT: {
            Matrix p0(2, 2), p1(2, 2);
            p0 << 1, 0, 0, 0;
            p1 << 0, 0, 0, 1;
            return embed(n, {{g.qubits[0], p0}}) + embed(n, {{g.qubits[0], p1}, {g.qubits[1], single("X")}});
        }
    }
    throw std::logic_error("unreachable");
}

inline Matrix unitary(const shadowlab::CircuitSpec &c) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.num_qubits());
    Matrix u = Matrix::Identity(dim, dim);
    for (const auto &g : c.gates()) {
        u = gate_matrix(c.num_qubits(), g) * u;
    }
    return u;
}

inline Matrix pauli(const shadowlab::PauliString &p) {
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        const char letter[2] = {shadowlab::pauli_char(p[q]), '\0'};
        out = kron(out, single(letter));
    }
    return out;
}

inline Eigen::VectorXcd zero_state(std::size_t n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    v(0) = 1.0;
    return v;
}

/// O(theta) = sum_i w_i V W_i diag(lambda_i) W_i^dagger V^dagger
inline Matrix observable(const shadowlab::ConventionalLinearModel &m) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m.num_qubits());
    const Matrix v = unitary(m.variational());
    Matrix o = Matrix::Zero(dim, dim);
    for (const auto &t : m.terms()) {
        const Matrix vw = v * unitary(t.basis);
        for (Eigen::Index j = 0; j < dim; ++j) {
            o += t.weight * t.eigenvalues[static_cast<std::size_t>(j)] * vw.col(j) * vw.col(j).adjoint();
        }
    }
    return o;
}

inline Matrix state(const shadowlab::ConventionalLinearModel &m, const std::vector<double> &x) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m.num_qubits());
    const Matrix u = unitary(m.encoder().bind(x));
    Matrix rho = Matrix::Zero(dim, dim);
    for (const auto &[index, p] : m.initial_state()) {
        const auto k = static_cast<Eigen::Index>(index);
        rho += p * u.col(k) * u.col(k).adjoint();
    }
    return rho;
}

inline double conventional_value(const shadowlab::ConventionalLinearModel &m, const std::vector<double> &x) {
    return (state(m, x) * observable(m)).trace().real();
}

/// Expected contribution of one Algorithm 1 iteration, summed over every term,
/// sign branch, eigenindex and measurement outcome, with normalization alpha.
inline double algorithm1_enumeration(const shadowlab::ConventionalLinearModel &m, const std::vector<double> &x,
                                     double alpha) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m.num_qubits());
    const Matrix udag = unitary(m.encoder().bind(x)).adjoint();
    const Matrix v = unitary(m.variational());
    std::vector<double> rho0(static_cast<std::size_t>(dim), 0.0);
    for (const auto &[index, p] : m.initial_state()) {
        rho0[index] += p;
    }
    double mean = 0.0;
    for (const auto &t : m.terms()) {
        double norm = 0.0;
        for (double l : t.eigenvalues) {
            norm += std::abs(l);
        }
        if (norm == 0.0 || t.weight == 0.0) {
            continue;
        }
        const double p_term = std::abs(t.weight) * norm / alpha;
        const double w_sign = t.weight > 0 ? 1.0 : -1.0;
        const Matrix circuit = udag * v * unitary(t.basis);
        for (double b : {1.0, -1.0}) {
            double branch_norm = 0.0;
            for (double l : t.eigenvalues) {
                branch_norm += std::max(0.0, b * l);
            }
            if (branch_norm == 0.0) {
                continue;
            }
            const double p_branch = branch_norm / norm;
            for (Eigen::Index j = 0; j < dim; ++j) {
                const double v_j = b * t.eigenvalues[static_cast<std::size_t>(j)];
                if (v_j <= 0.0) {
                    continue;
                }
                const double p_j = v_j / branch_norm;
                for (Eigen::Index jp = 0; jp < dim; ++jp) {
                    const double p_out = std::norm(circuit(jp, j));
                    mean += p_term * p_branch * p_j * p_out * w_sign * b * alpha *
                            rho0[static_cast<std::size_t>(jp)];
                }
            }
        }
    }
    return mean;
}

/// Smallest d in [1, m) with a d = 1 mod m, by exhaustive search.
inline uint64_t brute_inverse(uint64_t a, uint64_t m) {
    for (uint64_t d = 1; d < m; ++d) {
        if ((a * d) % m == 1) {
            return d;
        }
    }
    return 0;
}

/// b^e mod m by repeated multiplication (small values only).
inline uint64_t slow_pow(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    for (uint64_t i = 0; i < e; ++i) {
        r = (r * b) % m;
    }
    return r;
}

}  // namespace oracle
