// Copyright 2026 The qelm-elevator Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "qelm/quantum/state_vector.hpp"

namespace qelm::quantum {

/// Square unitary on a 2^D-dimensional register.
class DenseUnitary {
public:
    /// Checks shape (power-of-two dimension) and U^dagger U = I within tol.
    explicit DenseUnitary(Eigen::MatrixXcd matrix, double tol = 1e-9);

    /// Shape check only; for matrices unitary by construction.
    static DenseUnitary unchecked(Eigen::MatrixXcd matrix);

    std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
    int num_qubits() const { return num_qubits_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    /// max_ij |(U^dagger U - I)_ij|
    double unitarity_error() const;

    /// One "re,im" pair per entry, one matrix row per line.
    void write_csv(std::ostream& out) const;

private:
    DenseUnitary() = default;
    void set_matrix(Eigen::MatrixXcd matrix);

    Eigen::MatrixXcd matrix_;
    int num_qubits_ = 0;
};

StateVector apply_dense_unitary(StateVector state, const DenseUnitary& u);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// diagonal phases of R folded back into Q. Pure function of (dim, seed).
DenseUnitary haar_unitary(std::size_t dim, std::uint64_t seed);

struct IsingParams {
    int num_qubits = 0;
    /// Symmetric, zero diagonal; row-major num_qubits x num_qubits.
    Eigen::MatrixXd couplings;
    Eigen::VectorXd fields;
    double time_step = 1.0;

    /// Throws ValidationError when J is not symmetric with zero diagonal or
    /// a value is non-finite.
    void validate() const;
};

/// H = sum_{k<j} J_kj Z_k Z_j + sum_j a_j X_j as a dense real symmetric
/// matrix. Each unordered pair contributes once.
Eigen::MatrixXd ising_hamiltonian(const IsingParams& params);

/// exp(-i H dt) via eigendecomposition of the (real symmetric) Hamiltonian.
DenseUnitary ising_unitary(const IsingParams& params);

/// J_kj, a_j i.i.d. uniform on [-1, 1]; J symmetrized by mirroring the upper
/// triangle.
IsingParams sample_ising_params(int num_qubits, std::uint64_t seed, double time_step = 1.0);

}  // namespace qelm::quantum
