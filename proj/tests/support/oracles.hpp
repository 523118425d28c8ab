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

// Independent reference implementations used only by tests.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qelm/quantum/state_vector.hpp"

namespace qelm::testing {

using Eigen::MatrixXcd;
using C = std::complex<double>;

inline Eigen::Matrix2cd textbook_matrix(quantum::GateKind kind, double angle) {
    const C i(0.0, 1.0);
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    Eigen::Matrix2cd m;
    switch (kind) {
        case quantum::GateKind::RX: m << c, -i * s, -i * s, c; break;
        case quantum::GateKind::RY: m << c, -s, s, c; break;
        case quantum::GateKind::RZ: m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2)); break;
        case quantum::GateKind::X: m << 0, 1, 1, 0; break;
        case quantum::GateKind::Y: m << 0, -i, i, 0; break;
        case quantum::GateKind::Z: m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

inline MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
    return out;
}

/// Tensor product with qubit D-1 leftmost, so qubit 0 is the index LSB.
inline MatrixXcd tensor(const std::vector<MatrixXcd>& per_qubit) {
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (auto it = per_qubit.rbegin(); it != per_qubit.rend(); ++it) out = kron(out, *it);
    return out;
}

/// Full 2^D x 2^D matrix of a gate built from Kronecker products.
inline MatrixXcd full_gate_matrix(const quantum::GateOp& g, int d) {
    const MatrixXcd id = MatrixXcd::Identity(2, 2);
    std::vector<MatrixXcd> ops(static_cast<std::size_t>(d), id);
    if (!g.is_two_qubit()) {
        ops[static_cast<std::size_t>(g.target)] = textbook_matrix(g.kind, g.angle.value_or(0.0));
        return tensor(ops);
    }
    MatrixXcd p0 = MatrixXcd::Zero(2, 2), p1 = MatrixXcd::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    const auto flip = textbook_matrix(g.kind == quantum::GateKind::CNOT ? quantum::GateKind::X : quantum::GateKind::Z, 0);
    auto off = ops, on = ops;
    off[static_cast<std::size_t>(*g.control)] = p0;
    on[static_cast<std::size_t>(*g.control)] = p1;
    on[static_cast<std::size_t>(g.target)] = flip;
    return tensor(off) + tensor(on);
}

inline quantum::GateOp random_gate(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> kind(0, d >= 2 ? 7 : 5);
    std::uniform_int_distribution<int> qubit(0, d - 1);
    std::uniform_real_distribution<double> angle(-2 * M_PI, 2 * M_PI);
    const int t = qubit(rng);
    switch (kind(rng)) {
        case 0: return quantum::GateOp::rx(t, angle(rng));
        case 1: return quantum::GateOp::ry(t, angle(rng));
        case 2: return quantum::GateOp::rz(t, angle(rng));
        case 3: return quantum::GateOp::pauli(quantum::PauliAxis::X, t);
        case 4: return quantum::GateOp::pauli(quantum::PauliAxis::Y, t);
        case 5: return quantum::GateOp::pauli(quantum::PauliAxis::Z, t);
        default: {
            int c = qubit(rng);
            while (c == t) c = qubit(rng);
            return kind(rng) % 2 ? quantum::GateOp::cnot(c, t) : quantum::GateOp::cz(c, t);
        }
    }
}

inline std::vector<C> random_state(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> n;
    std::vector<C> a(std::size_t{1} << d);
    double norm = 0;
    for (auto& x : a) {
        x = {n(rng), n(rng)};
        norm += std::norm(x);
    }
    for (auto& x : a) x /= std::sqrt(norm);
    return a;
}

/// (V^T V)^{-1} V^T t with an explicit inverse.
inline Eigen::VectorXd normal_equation_solution(const Eigen::MatrixXd& v, const Eigen::VectorXd& t) {
    const Eigen::MatrixXd gram = v.transpose() * v;
    return gram.inverse() * (v.transpose() * t);
}

/// U of the first sample by counting all cross pairs.
inline double enumerated_u(const std::vector<double>& a, const std::vector<double>& b) {
    double u = 0;
    for (double x : a) {
        for (double y : b) u += x > y ? 1.0 : (x == y ? 0.5 : 0.0);
    }
    return u;
}

}  // namespace qelm::testing
