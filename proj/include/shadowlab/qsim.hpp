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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shadowlab/circuit.hpp"
#include "shadowlab/pauli.hpp"
#include "shadowlab/rng.hpp"

namespace shadowlab::qsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxStatevectorQubits = 22;
inline constexpr std::size_t kMaxDenseQubits = 10;
inline constexpr double kNormTolerance = 1e-10;

/// Normalized pure state on n qubits. Amplitude index bit (n-1-q) is qubit q.
class Statevector {
   public:
    /// |0...0>
    static Statevector zero(std::size_t n);
    static Statevector basis(std::size_t n, uint64_t index);
    /// Validates length 2^n and unit norm within kNormTolerance.
    static Statevector from_amplitudes(std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

   private:
    Statevector(std::size_t n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}
    friend Statevector apply_circuit(const Statevector &, const CircuitSpec &);
    friend Statevector rotate_to_pauli_basis(const Statevector &, std::span<const Pauli>);
    friend class StateKernels;

    std::size_t n_ = 0;
    std::vector<Complex> amps_;
};

/// Dense mixed state (n <= kMaxDenseQubits).
class DensityOperator {
   public:
    static DensityOperator from_pure(const Statevector &psi);
    /// Validates Hermiticity, unit trace and eigenvalues >= -1e-10.
    static DensityOperator from_matrix(Matrix matrix);

    std::size_t num_qubits() const { return n_; }
    const Matrix &matrix() const { return m_; }

   private:
    DensityOperator(std::size_t n, Matrix m) : n_(n), m_(std::move(m)) {}
    std::size_t n_ = 0;
    Matrix m_;
};

/// Returns the evolved state; the input is untouched.
Statevector apply_circuit(const Statevector &state, const CircuitSpec &circuit);

/// <psi|P|psi>
double expval_pauli(const Statevector &state, const PauliString &p);

/// Tr[rho * obs] for Hermitian obs (checked within 1e-8).
double expval_dense(const DensityOperator &rho, const Matrix &obs);

/// Precomputed Born distribution of a state for repeated computational-basis
/// sampling; draws agree exactly with sample_index for the same generator.
class BornSampler {
   public:
    explicit BornSampler(const Statevector &state);
    explicit BornSampler(std::span<const double> probabilities);
    uint64_t operator()(Rng &rng) const;
    std::size_t size() const { return cumulative_.size(); }

   private:
    std::vector<double> cumulative_;
    uint64_t last_nonzero_ = 0;
};

uint64_t sample_index(const Statevector &state, Rng &rng);
std::string sample_computational(const Statevector &state, Rng &rng);
std::string index_to_bits(uint64_t index, std::size_t n);

/// Applies H for X, S^dagger then H for Y and nothing for Z on each qubit so
/// that a computational measurement afterwards measures the requested bases.
Statevector rotate_to_pauli_basis(const Statevector &state, std::span<const Pauli> bases);

/// Measures P once in its eigenbasis and returns the eigenvalue (+1 or -1).
/// Identity positions are ignored.
int sample_pauli_eigenvalue(const Statevector &state, const PauliString &p, Rng &rng);

/// Dense helpers used by the model evaluators and by tests.
Matrix pauli_matrix(const PauliString &p);
Matrix circuit_unitary(const CircuitSpec &circuit);
bool is_hermitian(const Matrix &m, double tol);

/// Serial gate kernels. The default kernels switch to OpenMP loops for large
/// registers; these stay single-threaded and serve as the reference in tests
/// and benchmarks.
namespace reference {
Statevector apply_circuit(const Statevector &state, const CircuitSpec &circuit);
double expval_pauli(const Statevector &state, const PauliString &p);
}  // namespace reference

/// Register size (in amplitudes) at which the kernels go parallel.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

}  // namespace shadowlab::qsim
