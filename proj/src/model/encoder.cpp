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

#include "qelm/model/encoder.hpp"

#include <random>

#include "qelm/error.hpp"

namespace qelm::model {

using quantum::GateOp;
using quantum::PauliAxis;

std::string to_string(EncoderKind kind) { return kind == EncoderKind::DHE ? "DHE" : "RHE"; }

EncoderKind parse_encoder_kind(const std::string& text) {
    if (text == "DHE") return EncoderKind::DHE;
    if (text == "RHE") return EncoderKind::RHE;
    throw ConfigurationError("unknown encoder '" + text + "'");
}

EncoderSpec EncoderSpec::dhe(int num_features, int depth) {
    EncoderSpec s;
    s.kind = EncoderKind::DHE;
    s.num_features = num_features;
    s.depth = depth;
    s.axis_assignment.assign(std::max(depth, 0), std::vector<PauliAxis>(std::max(num_features, 0), PauliAxis::X));
    return s;
}

EncoderSpec EncoderSpec::rhe(int num_features, int depth, std::uint64_t seed) {
    EncoderSpec s;
    s.kind = EncoderKind::RHE;
    s.num_features = num_features;
    s.depth = depth;
    s.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    s.axis_assignment.resize(std::max(depth, 0));
    for (auto& layer : s.axis_assignment) {
        layer.resize(std::max(num_features, 0));
        for (auto& axis : layer) axis = static_cast<PauliAxis>(pick(rng));
    }
    return s;
}

void EncoderSpec::validate() const {
    if (num_features < 2) {
        throw ConfigurationError("encoder: cyclic entanglement needs at least 2 features, got " +
                                 std::to_string(num_features));
    }
    if (num_features > quantum::kMaxQubits) {
        throw ConfigurationError("encoder: num_features exceeds the qubit cap");
    }
    if (depth < 1) throw ConfigurationError("encoder: depth must be >= 1");
    if (static_cast<int>(axis_assignment.size()) != depth) {
        throw ConfigurationError("encoder: axis_assignment must have one entry per layer");
    }
    for (const auto& layer : axis_assignment) {
        if (static_cast<int>(layer.size()) != num_features) {
            throw ConfigurationError("encoder: axis_assignment layer must have one axis per qubit");
        }
        if (kind == EncoderKind::DHE) {
            for (auto axis : layer) {
                if (axis != PauliAxis::X) throw ConfigurationError("encoder: DHE rotations must all be RX");
            }
        }
    }
}

EncoderCircuit build_encoder(const EncoderSpec& spec) {
    spec.validate();
    const int m = spec.num_features;
    EncoderCircuit circuit;
    circuit.num_qubits = m;
    for (const auto& axes : spec.axis_assignment) {
        std::vector<EncoderGate> layer;
        layer.reserve(2 * m);
        for (int q = 0; q < m; ++q) {
            layer.push_back({GateOp::rotation(axes[q], q, 0.0), q});
        }
        // CZ is symmetric, so a two-qubit ring collapses to one edge
        const int ring = m == 2 ? 1 : m;
        for (int q = 0; q < ring; ++q) {
            layer.push_back({GateOp::cz(q, (q + 1) % m), std::nullopt});
        }
        circuit.layers.push_back(std::move(layer));
    }
    return circuit;
}

std::vector<GateOp> EncoderCircuit::bind(const Eigen::VectorXd& angles) const {
    if (angles.size() != num_qubits) {
        throw ShapeError("encoder: expected " + std::to_string(num_qubits) + " angles, got " +
                         std::to_string(angles.size()));
    }
    std::vector<GateOp> gates;
    for (const auto& layer : layers) {
        for (const auto& g : layer) {
            GateOp op = g.gate;
            if (g.feature) op.angle = angles(*g.feature);
            gates.push_back(op);
        }
    }
    return gates;
}

}  // namespace qelm::model
