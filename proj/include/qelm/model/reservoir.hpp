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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qelm/quantum/state_vector.hpp"
#include "qelm/quantum/unitary.hpp"

namespace qelm::model {

enum class ReservoirKind { CNOT, HAAR, ISING, ROTATION };

std::string to_string(ReservoirKind kind);
ReservoirKind parse_reservoir_kind(const std::string& text);

struct RotationGate {
    quantum::PauliAxis axis = quantum::PauliAxis::X;
    double angle = 0.0;  ///< [0, 2*pi)

    bool operator==(const RotationGate&) const = default;
};

/// Fixed random reservoir description. Only the fields required by `kind`
/// are populated: `depth` for CNOT/ROTATION, `ising` for ISING,
/// `rotation_layers` for ROTATION. HAAR is reproduced from `seed`.
struct ReservoirSpec {
    ReservoirKind kind = ReservoirKind::CNOT;
    int num_qubits = 0;
    int depth = 0;
    std::optional<quantum::IsingParams> ising;
    std::optional<std::vector<std::vector<RotationGate>>> rotation_layers;
    std::uint64_t seed = 0;

    /// Draws all random parameters for `kind` from `seed`.
    static ReservoirSpec sample(ReservoirKind kind, int num_qubits, int depth, std::uint64_t seed,
                                double ising_time_step = 1.0);

    void validate() const;
};

/// Executable reservoir: either a gate list or a dense unitary.
class Reservoir {
public:
    const ReservoirSpec& spec() const { return spec_; }
    int num_qubits() const { return spec_.num_qubits; }
    bool is_dense() const { return unitary_.has_value(); }

    const std::vector<quantum::GateOp>& gates() const { return gates_; }
    /// Only valid when is_dense().
    const quantum::DenseUnitary& unitary() const { return *unitary_; }

    void apply(quantum::StateVector& state) const;

    /// A HAAR reservoir rebuilt from a stored matrix rather than its seed.
    static Reservoir from_unitary(ReservoirSpec spec, quantum::DenseUnitary unitary);

private:
    friend Reservoir build_reservoir(const ReservoirSpec& spec);

    ReservoirSpec spec_;
    std::vector<quantum::GateOp> gates_;
    std::optional<quantum::DenseUnitary> unitary_;
};

/// Cyclic ring (0,1), (1,2), ..., (n-1,0); empty for n < 2.
std::vector<std::pair<int, int>> cyclic_pairs(int n);

Reservoir build_reservoir(const ReservoirSpec& spec);

}  // namespace qelm::model
