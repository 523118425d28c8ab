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

#include "qelm/quantum/unitary.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qelm/error.hpp"

namespace qelm::quantum {

namespace {

int log2_exact(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw ConfigurationError("unitary dimension must be a power of two, got " + std::to_string(dim));
    }
    int d = 0;
    while ((std::size_t{1} << d) < dim) ++d;
    return d;
}

}  // namespace

DenseUnitary::DenseUnitary(Eigen::MatrixXcd matrix, double tol) {
    set_matrix(std::move(matrix));
    const double err = unitarity_error();
    if (!(err <= tol)) {
        throw ValidationError("matrix is not unitary: max |U^dag U - I| = " + std::to_string(err));
    }
}

DenseUnitary DenseUnitary::unchecked(Eigen::MatrixXcd matrix) {
    DenseUnitary u;
    u.set_matrix(std::move(matrix));
    return u;
}

void DenseUnitary::set_matrix(Eigen::MatrixXcd matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw ShapeError("unitary must be square");
    }
    num_qubits_ = log2_exact(static_cast<std::size_t>(matrix.rows()));
    if (num_qubits_ > kMaxDenseQubits) {
        throw ConfigurationError("dense unitaries are capped at " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    matrix_ = std::move(matrix);
}

double DenseUnitary::unitarity_error() const {
    const Eigen::MatrixXcd gram = matrix_.adjoint() * matrix_;
    return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

void DenseUnitary::write_csv(std::ostream& out) const {
    const auto old = out.precision(17);
    for (Eigen::Index r = 0; r < matrix_.rows(); ++r) {
        for (Eigen::Index c = 0; c < matrix_.cols(); ++c) {
            if (c) out << ',';
            out << matrix_(r, c).real() << ',' << matrix_(r, c).imag();
        }
        out << '\n';
    }
    out.precision(old);
}

StateVector apply_dense_unitary(StateVector state, const DenseUnitary& u) {
    if (u.dim() != state.dim()) {
        throw ShapeError("unitary of dimension " + std::to_string(u.dim()) + " applied to state of dimension " +
                         std::to_string(state.dim()));
    }
    auto amps = state.amplitudes();
    Eigen::Map<Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
    const Eigen::VectorXcd out = u.matrix() * psi;
    psi = out;
    return state;
}

DenseUnitary haar_unitary(std::size_t dim, std::uint64_t seed) {
    const int d = log2_exact(dim);
    if (d > kMaxDenseQubits) {
        throw ConfigurationError("haar_unitary: dimension exceeds the dense cap");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
    Eigen::MatrixXcd z(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(r, c) = Complex{re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const auto& packed = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex rjj = packed(j, j);
        const double mag = std::abs(rjj);
        const Complex phase = mag > 0.0 ? rjj / mag : Complex{1.0, 0.0};
        q.col(j) *= phase;
    }
    return DenseUnitary::unchecked(std::move(q));
}

void IsingParams::validate() const {
    const auto d = static_cast<Eigen::Index>(num_qubits);
    if (num_qubits < 1) throw ValidationError("ising: num_qubits must be >= 1");
    if (couplings.rows() != d || couplings.cols() != d) throw ValidationError("ising: couplings must be D x D");
    if (fields.size() != d) throw ValidationError("ising: fields must have D entries");
    if (!(time_step > 0.0) || !std::isfinite(time_step)) throw ValidationError("ising: time_step must be > 0");
    if (!couplings.allFinite() || !fields.allFinite()) throw ValidationError("ising: non-finite parameter");
    for (Eigen::Index k = 0; k < d; ++k) {
        if (couplings(k, k) != 0.0) throw ValidationError("ising: couplings diagonal must be zero");
        for (Eigen::Index j = k + 1; j < d; ++j) {
            if (couplings(k, j) != couplings(j, k)) throw ValidationError("ising: couplings must be symmetric");
        }
    }
}

Eigen::MatrixXd ising_hamiltonian(const IsingParams& params) {
    params.validate();
    if (params.num_qubits > kMaxDenseQubits) {
        throw ConfigurationError("ising: dense exponentiation capped at " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    const int d = params.num_qubits;
    const std::size_t dim = std::size_t{1} << d;
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int k = 0; k < d; ++k) {
            const double zk = (s >> k & 1U) ? -1.0 : 1.0;
            for (int j = k + 1; j < d; ++j) {
                const double zj = (s >> j & 1U) ? -1.0 : 1.0;
                diag += params.couplings(k, j) * zk * zj;
            }
        }
        const auto row = static_cast<Eigen::Index>(s);
        h(row, row) = diag;
        for (int j = 0; j < d; ++j) {
            h(row, static_cast<Eigen::Index>(s ^ (std::size_t{1} << j))) += params.fields(j);
        }
    }
    return h;
}

DenseUnitary ising_unitary(const IsingParams& params) {
    const Eigen::MatrixXd h = ising_hamiltonian(params);
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw ValidationError("ising: Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    if (eig.info() != Eigen::Success) {
        throw ValidationError("ising: eigendecomposition failed");
    }
    const Eigen::MatrixXd& v = eig.eigenvectors();
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        phases(k) = std::polar(1.0, -lambda(k) * params.time_step);
    }
    // U = V diag(phases) V^T, split into real and imaginary parts to stay in real GEMMs
    const Eigen::MatrixXd vc = v * phases.real().asDiagonal();
    const Eigen::MatrixXd vs = v * phases.imag().asDiagonal();
    Eigen::MatrixXcd u(h.rows(), h.cols());
    u.real() = vc * v.transpose();
    u.imag() = vs * v.transpose();
    return DenseUnitary::unchecked(std::move(u));
}

IsingParams sample_ising_params(int num_qubits, std::uint64_t seed, double time_step) {
    if (num_qubits < 1) throw ConfigurationError("sample_ising_params: num_qubits must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    IsingParams p;
    p.num_qubits = num_qubits;
    p.time_step = time_step;
    p.couplings = Eigen::MatrixXd::Zero(num_qubits, num_qubits);
    for (int k = 0; k < num_qubits; ++k) {
        for (int j = k + 1; j < num_qubits; ++j) {
            p.couplings(k, j) = uniform(rng);
            p.couplings(j, k) = p.couplings(k, j);
        }
    }
    p.fields.resize(num_qubits);
    for (int j = 0; j < num_qubits; ++j) p.fields(j) = uniform(rng);
    return p;
}

}  // namespace qelm::quantum
