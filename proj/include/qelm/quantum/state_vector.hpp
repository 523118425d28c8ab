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

/**
 * @file
 * Dense state-vector representation of a D-qubit pure state and the gate
 * kernels that act on it.
 *
 * Bit convention: qubit 0 is the least-significant bit of the amplitude
 * index, so basis state |q_{D-1} ... q_1 q_0> lives at index
 * sum_k q_k * 2^k.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qelm::quantum {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 16;
inline constexpr int kMaxDenseQubits = 12;

enum class PauliAxis { X, Y, Z };

enum class GateKind { RX, RY, RZ, X, Y, Z, CNOT, CZ };

std::string to_string(PauliAxis axis);
std::string to_string(GateKind kind);
PauliAxis parse_axis(const std::string& text);

/// Rotation gate kind for a Pauli axis (X -> RX, ...).
GateKind rotation_kind(PauliAxis axis);

struct GateOp {
    GateKind kind = GateKind::X;
    int target = 0;
    std::optional<int> control;
    std::optional<double> angle;

    static GateOp rotation(PauliAxis axis, int target, double angle);
    static GateOp rx(int target, double angle) { return rotation(PauliAxis::X, target, angle); }
    static GateOp ry(int target, double angle) { return rotation(PauliAxis::Y, target, angle); }
    static GateOp rz(int target, double angle) { return rotation(PauliAxis::Z, target, angle); }
    static GateOp pauli(PauliAxis axis, int target);
    static GateOp cnot(int control, int target);
    static GateOp cz(int control, int target);

    bool is_rotation() const;
    bool is_two_qubit() const;

    /// Throws ConfigurationError when the field combination is malformed
    /// and IndexError when an index does not fit a register of num_qubits.
    void validate(int num_qubits) const;

    bool operator==(const GateOp&) const = default;
};

/// 2x2 matrix of a single-qubit gate, row-major {m00, m01, m10, m11}.
std::array<Complex, 4> single_qubit_matrix(const GateOp& gate);

class StateVector {
public:
    /// |0...0> on num_qubits qubits, 1 <= num_qubits <= kMaxQubits.
    explicit StateVector(int num_qubits);

    /// Takes ownership of a raw amplitude array of length 2^D. The array is
    /// not renormalized.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    double norm() const;

    /// In-place kernel application.
    void apply(const GateOp& gate);

    /// <psi| P_qubit |psi> without building the full operator.
    double expectation(int qubit, PauliAxis axis) const;

private:
    StateVector() = default;

    void apply_single(const std::array<Complex, 4>& m, int target);
    void apply_phase(Complex phase0, Complex phase1, int target);

    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

StateVector new_state(int num_qubits);

StateVector apply_gate(StateVector state, const GateOp& gate);

double expectation_pauli(const StateVector& state, int qubit, PauliAxis axis);

}  // namespace qelm::quantum
