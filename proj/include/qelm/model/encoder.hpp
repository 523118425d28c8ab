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

namespace qelm::model {

enum class EncoderKind { DHE, RHE };

std::string to_string(EncoderKind kind);
EncoderKind parse_encoder_kind(const std::string& text);

/// Hardware-efficient encoder description. One qubit per feature; each layer
/// is one rotation per qubit followed by a cyclic CZ ring.
struct EncoderSpec {
    EncoderKind kind = EncoderKind::DHE;
    int num_features = 0;
    int depth = 1;
    /// axis_assignment[layer][qubit]
    std::vector<std::vector<quantum::PauliAxis>> axis_assignment;
    std::uint64_t seed = 0;

    /// All-X rotations in every layer.
    static EncoderSpec dhe(int num_features, int depth = 1);
    /// Axes drawn uniformly from {X, Y, Z} per layer and qubit.
    static EncoderSpec rhe(int num_features, int depth, std::uint64_t seed);

    int num_qubits() const { return num_features; }
    void validate() const;
};

/// A gate whose rotation angle, when `feature` is set, is taken from the
/// bound angle vector at execution time.
struct EncoderGate {
    quantum::GateOp gate;
    std::optional<int> feature;
};

struct EncoderCircuit {
    int num_qubits = 0;
    std::vector<std::vector<EncoderGate>> layers;

    /// Concrete gate list with every feature slot bound. Each layer reuses
    /// the same angles.
    std::vector<quantum::GateOp> bind(const Eigen::VectorXd& angles) const;
};

EncoderCircuit build_encoder(const EncoderSpec& spec);

}  // namespace qelm::model
