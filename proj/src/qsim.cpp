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


#include "shadowlab/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "shadowlab/errors.hpp"

namespace shadowlab::qsim {

namespace {

using Gate2 = std::array<Complex, 4>;  // row-major 2x2

Gate2 single_qubit_matrix(const Gate &gate) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (gate.kind) {
        case GateKind::RY: {
            // exp(-i * angle * Y)
            const double c = std::cos(gate.angle);
            const double s = std::sin(gate.angle);
            return {Complex(c), Complex(-s), Complex(s), Complex(c)};
        }
        case GateKind::X:
            return {Complex(0), Complex(1), Complex(1), Complex(0)};
        case GateKind::H:
            return {Complex(r), Complex(r), Complex(r), Complex(-r)};
        case GateKind::S:
            return {Complex(1), Complex(0), Complex(0), Complex(0, 1)};
        case GateKind::Sdg:
            return {Complex(1), Complex(0), Complex(0), Complex(0, -1)};
        case GateKind::CNOT:
            break;
    }
    throw ValidationError("not a single-qubit gate");
}

inline std::size_t insert_zero_bit(std::size_t k, std::size_t bit) {
    const std::size_t low = k & (bit - 1);
    return ((k ^ low) << 1) | low;
}

template <bool Parallel>
void apply_single(std::vector<Complex> &amps, std::size_t bit, const Gate2 &u) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), bit);
        const std::size_t i1 = i0 | bit;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = u[0] * a0 + u[1] * a1;
        amps[i1] = u[2] * a0 + u[3] * a1;
    }
}

template <bool Parallel>
void apply_cnot(std::vector<Complex> &amps, std::size_t control_bit, std::size_t target_bit) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(k), target_bit);
        if (i0 & control_bit) {
            std::swap(amps[i0], amps[i0 | target_bit]);
        }
    }
}

std::size_t bit_of(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

template <bool Parallel>
void run_gates(std::vector<Complex> &amps, std::size_t n, const std::vector<Gate> &gates) {
    for (const Gate &g : gates) {
        if (g.kind == GateKind::CNOT) {
            apply_cnot<Parallel>(amps, bit_of(n, g.qubits[0]), bit_of(n, g.qubits[1]));
        } else {
            apply_single<Parallel>(amps, bit_of(n, g.qubits[0]), single_qubit_matrix(g));
        }
    }
}

template <bool Parallel>
double pauli_expectation(const std::vector<Complex> &amps, const PauliString &p) {
    const uint64_t flip = p.flip_mask();
    const uint64_t phase = p.phase_mask();
    static constexpr Complex kIPow[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    const Complex global = kIPow[p.y_count() % 4];
    // Fixed-size blocks summed in order keep the result independent of the
    // thread count.
    constexpr std::size_t kBlock = 4096;
    const std::size_t dim = amps.size();
    const auto blocks = static_cast<std::int64_t>((dim + kBlock - 1) / kBlock);
    std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
        const std::size_t end = std::min(dim, begin + kBlock);
        double sum = 0.0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const double sign = (std::popcount(idx & phase) & 1) ? -1.0 : 1.0;
            const Complex term = std::conj(amps[idx ^ flip]) * amps[idx] * global * sign;
            sum += term.real();
        }
        partial[static_cast<std::size_t>(b)] = sum;
    }
    double total = 0.0;
    for (double v : partial) {
        total += v;
    }
    return total;
}

void check_statevector_size(std::size_t n) {
    require(n <= kMaxStatevectorQubits, "statevectors are limited to " + std::to_string(kMaxStatevectorQubits) +
                                            " qubits");
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

class StateKernels {
   public:
    static std::vector<Complex> &amps(Statevector &s) { return s.amps_; }
};

Statevector Statevector::zero(std::size_t n) { return basis(n, 0); }

Statevector Statevector::basis(std::size_t n, uint64_t index) {
    check_statevector_size(n);
    const std::size_t dim = std::size_t{1} << n;
    require(index < dim, "basis index out of range");
    std::vector<Complex> amps(dim, Complex(0.0));
    amps[index] = 1.0;
    return Statevector(n, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    require(dim >= 1 && std::has_single_bit(dim), "amplitude count must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    check_statevector_size(n);
    Statevector s(n, std::move(amplitudes));
    require(std::abs(s.norm_squared() - 1.0) <= kNormTolerance, "statevector is not normalized");
    return s;
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out[i] = std::norm(amps_[i]);
    }
    return out;
}

DensityOperator DensityOperator::from_pure(const Statevector &psi) {
    require(psi.num_qubits() <= kMaxDenseQubits, "dense operators are limited to 10 qubits");
    Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), static_cast<Eigen::Index>(psi.dim()));
    return DensityOperator(psi.num_qubits(), v * v.adjoint());
}

DensityOperator DensityOperator::from_matrix(Matrix matrix) {
    const auto dim = static_cast<std::size_t>(matrix.rows());
    require(matrix.rows() == matrix.cols(), "density matrix must be square");
    require(dim >= 1 && std::has_single_bit(dim), "density matrix dimension must be a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    require(n <= kMaxDenseQubits, "dense operators are limited to 10 qubits");
    require(is_hermitian(matrix, kNormTolerance), "density matrix is not Hermitian");
    require(std::abs(matrix.trace() - Complex(1.0)) <= kNormTolerance, "density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix, Eigen::EigenvaluesOnly);
    require(solver.eigenvalues().minCoeff() >= -kNormTolerance, "density matrix has negative eigenvalues");
    return DensityOperator(n, std::move(matrix));
}

Statevector apply_circuit(const Statevector &state, const CircuitSpec &circuit) {
    require(circuit.num_qubits() == state.num_qubits(), "circuit and state qubit counts differ");
    Statevector out = state;
    if (out.dim() >= kParallelThreshold) {
        run_gates<true>(out.amps_, out.n_, circuit.gates());
    } else {
        run_gates<false>(out.amps_, out.n_, circuit.gates());
    }
    return out;
}

double expval_pauli(const Statevector &state, const PauliString &p) {
    require(p.num_qubits() == state.num_qubits(), "Pauli and state qubit counts differ");
    if (state.dim() >= kParallelThreshold) {
        return pauli_expectation<true>(state.amplitudes(), p);
    }
    return pauli_expectation<false>(state.amplitudes(), p);
}

namespace reference {

Statevector apply_circuit(const Statevector &state, const CircuitSpec &circuit) {
    require(circuit.num_qubits() == state.num_qubits(), "circuit and state qubit counts differ");
    Statevector out = state;
    run_gates<false>(StateKernels::amps(out), out.num_qubits(), circuit.gates());
    return out;
}

double expval_pauli(const Statevector &state, const PauliString &p) {
    require(p.num_qubits() == state.num_qubits(), "Pauli and state qubit counts differ");
    return pauli_expectation<false>(state.amplitudes(), p);
}

}  // namespace reference

bool is_hermitian(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double expval_dense(const DensityOperator &rho, const Matrix &obs) {
    const Matrix &r = rho.matrix();
    require(obs.rows() == r.rows() && obs.cols() == r.cols(), "observable and state dimensions differ");
    require(is_hermitian(obs, 1e-8), "observable is not Hermitian");
    const Complex trace = r.cwiseProduct(obs.transpose()).sum();
    ensure(std::abs(trace.imag()) < 1e-8, "Tr[rho O] has a non-negligible imaginary part");
    return trace.real();
}

BornSampler::BornSampler(const Statevector &state) : BornSampler(state.probabilities()) {}

BornSampler::BornSampler(std::span<const double> probabilities) : cumulative_(probabilities.size()) {
    double total = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > 0.0) {
            total += probabilities[i];
            last_nonzero_ = i;
        }
        cumulative_[i] = total;
    }
}

uint64_t BornSampler::operator()(Rng &rng) const {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        return last_nonzero_;
    }
    return static_cast<uint64_t>(it - cumulative_.begin());
}

uint64_t sample_index(const Statevector &state, Rng &rng) { return BornSampler(state)(rng); }

std::string index_to_bits(uint64_t index, std::size_t n) {
    std::string bits(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if (index & (uint64_t{1} << (n - 1 - q))) {
            bits[q] = '1';
        }
    }
    return bits;
}

std::string sample_computational(const Statevector &state, Rng &rng) {
    return index_to_bits(sample_index(state, rng), state.num_qubits());
}

Statevector rotate_to_pauli_basis(const Statevector &state, std::span<const Pauli> bases) {
    require(bases.size() == state.num_qubits(), "need one basis symbol per qubit");
    const std::size_t n = state.num_qubits();
    CircuitSpec rotation(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (bases[q]) {
            case Pauli::X:
                rotation.h(q);
                break;
            case Pauli::Y:
                rotation.sdg(q).h(q);
                break;
            case Pauli::Z:
            case Pauli::I:
                break;
        }
    }
    return apply_circuit(state, rotation);
}

int sample_pauli_eigenvalue(const Statevector &state, const PauliString &p, Rng &rng) {
    require(p.num_qubits() == state.num_qubits(), "Pauli and state qubit counts differ");
    const Statevector rotated = rotate_to_pauli_basis(state, p.letters());
    const uint64_t outcome = sample_index(rotated, rng);
    const uint64_t support_mask = p.flip_mask() | p.phase_mask();
    return (std::popcount(outcome & support_mask) & 1) ? -1 : 1;
}

Matrix pauli_matrix(const PauliString &p) {
    Matrix out = Matrix::Identity(1, 1);
    for (Pauli letter : p.letters()) {
        Matrix m(2, 2);
        switch (letter) {
            case Pauli::I:
                m << 1, 0, 0, 1;
                break;
            case Pauli::X:
                m << 0, 1, 1, 0;
                break;
            case Pauli::Y:
                m << 0, Complex(0, -1), Complex(0, 1), 0;
                break;
            case Pauli::Z:
                m << 1, 0, 0, -1;
                break;
        }
        out = kron(out, m);
    }
    return out;
}

Matrix circuit_unitary(const CircuitSpec &circuit) {
    const std::size_t n = circuit.num_qubits();
    require(n <= kMaxDenseQubits, "dense operators are limited to 10 qubits");
    const std::size_t dim = std::size_t{1} << n;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const Statevector col = apply_circuit(Statevector::basis(n, c), circuit);
        for (std::size_t r = 0; r < dim; ++r) {
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
        }
    }
    return u;
}

}  // namespace shadowlab::qsim
