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

#include "qelm/model/reservoir.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qelm/error.hpp"

namespace qelm::model {

using quantum::GateOp;
using quantum::PauliAxis;

std::string to_string(ReservoirKind kind) {
    switch (kind) {
        case ReservoirKind::CNOT: return "CNOT";
        case ReservoirKind::HAAR: return "HAAR";
        case ReservoirKind::ISING: return "ISING";
        case ReservoirKind::ROTATION: return "ROTATION";
    }
    return "?";
}

ReservoirKind parse_reservoir_kind(const std::string& text) {
    if (text == "CNOT") return ReservoirKind::CNOT;
    if (text == "HAAR") return ReservoirKind::HAAR;
    if (text == "ISING") return ReservoirKind::ISING;
    if (text == "ROTATION") return ReservoirKind::ROTATION;
    throw ConfigurationError("unknown reservoir '" + text + "'");
}

std::vector<std::pair<int, int>> cyclic_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    if (n < 2) return pairs;
    for (int q = 0; q < n; ++q) pairs.emplace_back(q, (q + 1) % n);
    return pairs;
}

ReservoirSpec ReservoirSpec::sample(ReservoirKind kind, int num_qubits, int depth, std::uint64_t seed,
                                    double ising_time_step) {
    ReservoirSpec s;
    s.kind = kind;
    s.num_qubits = num_qubits;
    s.seed = seed;
    switch (kind) {
        case ReservoirKind::CNOT:
            s.depth = depth;
            break;
        case ReservoirKind::HAAR:
            break;
        case ReservoirKind::ISING:
            s.ising = quantum::sample_ising_params(num_qubits, seed, ising_time_step);
            break;
        case ReservoirKind::ROTATION: {
            s.depth = depth;
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<int> pick(0, 2);
            std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
            std::vector<std::vector<RotationGate>> layers(std::max(depth, 0));
            for (auto& layer : layers) {
                layer.resize(std::max(num_qubits, 0));
                for (auto& g : layer) {
                    g.axis = static_cast<PauliAxis>(pick(rng));
                    g.angle = angle(rng);
                }
            }
            s.rotation_layers = std::move(layers);
            break;
        }
    }
    return s;
}

void ReservoirSpec::validate() const {
    if (num_qubits < 1 || num_qubits > quantum::kMaxQubits) {
        throw ConfigurationError("reservoir: num_qubits out of range");
    }
    const bool gate_based = kind == ReservoirKind::CNOT || kind == ReservoirKind::ROTATION;
    if (gate_based && depth < 1) throw ConfigurationError("reservoir: depth must be >= 1 for " + to_string(kind));
    if (!gate_based && depth != 0) throw ConfigurationError("reservoir: depth is not used by " + to_string(kind));
    if (ising.has_value() != (kind == ReservoirKind::ISING)) {
        throw ConfigurationError("reservoir: ising params must be present exactly for ISING");
    }
    if (rotation_layers.has_value() != (kind == ReservoirKind::ROTATION)) {
        throw ConfigurationError("reservoir: rotation layers must be present exactly for ROTATION");
    }
    if (!gate_based && num_qubits > quantum::kMaxDenseQubits) {
        throw ConfigurationError("reservoir: dense reservoirs are capped at " +
                                 std::to_string(quantum::kMaxDenseQubits) + " qubits");
    }
    if (ising) {
        if (ising->num_qubits != num_qubits) throw ConfigurationError("reservoir: ising size mismatch");
        ising->validate();
    }
    if (rotation_layers) {
        if (static_cast<int>(rotation_layers->size()) != depth) {
            throw ConfigurationError("reservoir: rotation layer count must equal depth");
        }
        for (const auto& layer : *rotation_layers) {
            if (static_cast<int>(layer.size()) != num_qubits) {
                throw ConfigurationError("reservoir: rotation layer must have one gate per qubit");
            }
            for (const auto& g : layer) {
                if (!(g.angle >= 0.0 && g.angle < 2.0 * std::numbers::pi)) {
                    throw ConfigurationError("reservoir: rotation angle outside [0, 2pi)");
                }
            }
        }
    }
}

void Reservoir::apply(quantum::StateVector& state) const {
    if (state.num_qubits() != num_qubits()) {
        throw ShapeError("reservoir on " + std::to_string(num_qubits()) + " qubits applied to state on " +
                         std::to_string(state.num_qubits()));
    }
    if (unitary_) {
        state = quantum::apply_dense_unitary(std::move(state), *unitary_);
        return;
    }
    for (const auto& g : gates_) state.apply(g);
}

Reservoir Reservoir::from_unitary(ReservoirSpec spec, quantum::DenseUnitary unitary) {
    spec.validate();
    if (spec.kind != ReservoirKind::HAAR) throw ConfigurationError("reservoir: stored unitary only for HAAR");
    if (unitary.dim() != (std::size_t{1} << spec.num_qubits)) {
        throw ShapeError("reservoir: stored unitary dimension mismatch");
    }
    Reservoir r;
    r.spec_ = std::move(spec);
    r.unitary_ = std::move(unitary);
    return r;
}

Reservoir build_reservoir(const ReservoirSpec& spec) {
    spec.validate();
    Reservoir r;
    r.spec_ = spec;
    const int d = spec.num_qubits;
    switch (spec.kind) {
        case ReservoirKind::CNOT:
            for (int layer = 0; layer < spec.depth; ++layer) {
                for (auto [c, t] : cyclic_pairs(d)) r.gates_.push_back(GateOp::cnot(c, t));
            }
            break;
        case ReservoirKind::ROTATION:
            for (const auto& layer : *spec.rotation_layers) {
                for (int q = 0; q < d; ++q) r.gates_.push_back(GateOp::rotation(layer[q].axis, q, layer[q].angle));
                for (auto [c, t] : cyclic_pairs(d)) r.gates_.push_back(GateOp::cnot(c, t));
            }
            break;
        case ReservoirKind::HAAR:
            r.unitary_ = quantum::haar_unitary(std::size_t{1} << d, spec.seed);
            break;
        case ReservoirKind::ISING:
            r.unitary_ = quantum::ising_unitary(*spec.ising);
            break;
    }
    return r;
}

}  // namespace qelm::model
