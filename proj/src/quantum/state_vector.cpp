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

#include "qelm/quantum/state_vector.hpp"

#include <algorithm>
#include <cmath>

#include "qelm/error.hpp"

namespace qelm::quantum {

std::string to_string(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return "X";
        case PauliAxis::Y: return "Y";
        case PauliAxis::Z: return "Z";
    }
    return "?";
}

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

PauliAxis parse_axis(const std::string& text) {
    if (text == "X") return PauliAxis::X;
    if (text == "Y") return PauliAxis::Y;
    if (text == "Z") return PauliAxis::Z;
    throw ConfigurationError("unknown Pauli axis '" + text + "'");
}

GateKind rotation_kind(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return GateKind::RX;
        case PauliAxis::Y: return GateKind::RY;
        case PauliAxis::Z: return GateKind::RZ;
    }
    return GateKind::RX;
}

GateOp GateOp::rotation(PauliAxis axis, int target, double angle) {
    return GateOp{rotation_kind(axis), target, std::nullopt, angle};
}

GateOp GateOp::pauli(PauliAxis axis, int target) {
    static constexpr GateKind kinds[] = {GateKind::X, GateKind::Y, GateKind::Z};
    return GateOp{kinds[static_cast<int>(axis)], target, std::nullopt, std::nullopt};
}

GateOp GateOp::cnot(int control, int target) {
    return GateOp{GateKind::CNOT, target, control, std::nullopt};
}

GateOp GateOp::cz(int control, int target) {
    return GateOp{GateKind::CZ, target, control, std::nullopt};
}

bool GateOp::is_rotation() const {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool GateOp::is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
}

void GateOp::validate(int num_qubits) const {
    if (is_rotation() != angle.has_value()) {
        throw ConfigurationError(to_string(kind) + ": angle must be present exactly for rotation gates");
    }
    if (angle && !std::isfinite(*angle)) {
        throw ConfigurationError(to_string(kind) + ": non-finite angle");
    }
    if (is_two_qubit() != control.has_value()) {
        throw ConfigurationError(to_string(kind) + ": control must be present exactly for two-qubit gates");
    }
    if (target < 0 || target >= num_qubits) {
        throw IndexError(to_string(kind) + ": target qubit " + std::to_string(target) +
                         " outside register of " + std::to_string(num_qubits));
    }
    if (control) {
        if (*control < 0 || *control >= num_qubits) {
            throw IndexError(to_string(kind) + ": control qubit " + std::to_string(*control) +
                             " outside register of " + std::to_string(num_qubits));
        }
        if (*control == target) {
            throw ConfigurationError(to_string(kind) + ": control equals target");
        }
    }
}

std::array<Complex, 4> single_qubit_matrix(const GateOp& gate) {
    const Complex i{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::RX: {
            const double c = std::cos(*gate.angle / 2), s = std::sin(*gate.angle / 2);
            return {c, -i * s, -i * s, c};
        }
        case GateKind::RY: {
            const double c = std::cos(*gate.angle / 2), s = std::sin(*gate.angle / 2);
            return {c, -s, s, c};
        }
        case GateKind::RZ: {
            const double h = *gate.angle / 2;
            return {std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h)};
        }
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -i, i, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        default: break;
    }
    throw ConfigurationError(to_string(gate.kind) + " is not a single-qubit gate");
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw ConfigurationError("num_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                 "], got " + std::to_string(num_qubits));
    }
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || (n & (n - 1)) != 0) {
        throw ShapeError("amplitude count must be a power of two >= 2, got " + std::to_string(n));
    }
    int d = 0;
    while ((std::size_t{1} << d) < n) ++d;
    if (d > kMaxQubits) throw ConfigurationError("state exceeds qubit cap");
    StateVector s;
    s.num_qubits_ = d;
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto& a : amplitudes_) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::apply_single(const std::array<Complex, 4>& m, int target) {
    const std::size_t stride = std::size_t{1} << target;
    const std::size_t n = amplitudes_.size();
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t k = base; k < base + stride; ++k) {
            const Complex a0 = amplitudes_[k];
            const Complex a1 = amplitudes_[k + stride];
            amplitudes_[k] = m[0] * a0 + m[1] * a1;
            amplitudes_[k + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

void StateVector::apply_phase(Complex phase0, Complex phase1, int target) {
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
        amplitudes_[k] *= (k & mask) ? phase1 : phase0;
    }
}

void StateVector::apply(const GateOp& gate) {
    gate.validate(num_qubits_);
    const std::size_t tmask = std::size_t{1} << gate.target;
    switch (gate.kind) {
        case GateKind::RZ: {
            const double h = *gate.angle / 2;
            apply_phase(std::polar(1.0, -h), std::polar(1.0, h), gate.target);
            return;
        }
        case GateKind::Z:
            apply_phase(1.0, -1.0, gate.target);
            return;
        case GateKind::X:
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                if (!(k & tmask)) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
            }
            return;
        case GateKind::CNOT: {
            const std::size_t cmask = std::size_t{1} << *gate.control;
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                if ((k & cmask) && !(k & tmask)) std::swap(amplitudes_[k], amplitudes_[k | tmask]);
            }
            return;
        }
        case GateKind::CZ: {
            const std::size_t both = tmask | (std::size_t{1} << *gate.control);
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                if ((k & both) == both) amplitudes_[k] = -amplitudes_[k];
            }
            return;
        }
        default:
            apply_single(single_qubit_matrix(gate), gate.target);
            return;
    }
}

double StateVector::expectation(int qubit, PauliAxis axis) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw IndexError("expectation: qubit " + std::to_string(qubit) + " outside register of " +
                         std::to_string(num_qubits_));
    }
    const std::size_t mask = std::size_t{1} << qubit;
    double acc = 0.0;
    switch (axis) {
        case PauliAxis::Z:
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                acc += (k & mask) ? -std::norm(amplitudes_[k]) : std::norm(amplitudes_[k]);
            }
            break;
        case PauliAxis::X:
            // 2 Re(conj(a_k0) a_k1) over pairs differing in the qubit bit
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                if (!(k & mask)) acc += 2.0 * (std::conj(amplitudes_[k]) * amplitudes_[k | mask]).real();
            }
            break;
        case PauliAxis::Y:
            for (std::size_t k = 0; k < amplitudes_.size(); ++k) {
                if (!(k & mask)) acc += 2.0 * (std::conj(amplitudes_[k]) * amplitudes_[k | mask]).imag();
            }
            break;
    }
    return std::clamp(acc, -1.0, 1.0);
}

StateVector new_state(int num_qubits) { return StateVector(num_qubits); }

StateVector apply_gate(StateVector state, const GateOp& gate) {
    state.apply(gate);
    return state;
}

double expectation_pauli(const StateVector& state, int qubit, PauliAxis axis) {
    return state.expectation(qubit, axis);
}

}  // namespace qelm::quantum
