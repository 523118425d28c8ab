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

#include "qelm/model/circuit.hpp"

#include <string>

#include "qelm/error.hpp"

namespace qelm::model {

using quantum::PauliAxis;
using quantum::StateVector;

namespace {

void check_sizes(const EncoderCircuit& encoder, const Reservoir& reservoir) {
    if (encoder.num_qubits != reservoir.num_qubits()) {
        throw ShapeError("encoder has " + std::to_string(encoder.num_qubits) + " qubits, reservoir has " +
                         std::to_string(reservoir.num_qubits()));
    }
}

StateVector encode(const EncoderCircuit& encoder, const Eigen::VectorXd& angles) {
    StateVector state(encoder.num_qubits);
    for (const auto& g : encoder.bind(angles)) state.apply(g);
    return state;
}

void write_observations(const StateVector& state, Eigen::Ref<Eigen::VectorXd> out) {
    for (int q = 0; q < state.num_qubits(); ++q) {
        for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            out(observation_index(q, axis)) = state.expectation(q, axis);
        }
    }
}

}  // namespace

ObservationVector run_circuit(const EncoderCircuit& encoder, const Reservoir& reservoir,
                              const Eigen::VectorXd& angles) {
    check_sizes(encoder, reservoir);
    StateVector state = encode(encoder, angles);
    reservoir.apply(state);
    ObservationVector v(3 * state.num_qubits());
    write_observations(state, v);
    return v;
}

ObservationVector run_circuit(const EncoderSpec& encoder, const Reservoir& reservoir, const Eigen::VectorXd& angles) {
    return run_circuit(build_encoder(encoder), reservoir, angles);
}

Eigen::MatrixXd observe_batch(const EncoderCircuit& encoder, const Reservoir& reservoir,
                              const Eigen::MatrixXd& angle_rows) {
    check_sizes(encoder, reservoir);
    const int d = encoder.num_qubits;
    const Eigen::Index rows = angle_rows.rows();
    Eigen::MatrixXd obs(rows, 3 * d);
    if (!reservoir.is_dense()) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            obs.row(r) = run_circuit(encoder, reservoir, angle_rows.row(r).transpose()).transpose();
        }
        return obs;
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << d);
    Eigen::MatrixXcd encoded(dim, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const StateVector s = encode(encoder, angle_rows.row(r).transpose());
        const auto amps = s.amplitudes();
        encoded.col(r) = Eigen::Map<const Eigen::VectorXcd>(amps.data(), dim);
    }
    const Eigen::MatrixXcd evolved = reservoir.unitary().matrix() * encoded;
    std::vector<quantum::Complex> column(static_cast<std::size_t>(dim));
    for (Eigen::Index r = 0; r < rows; ++r) {
        Eigen::Map<Eigen::VectorXcd>(column.data(), dim) = evolved.col(r);
        const StateVector s = StateVector::from_amplitudes(column);
        Eigen::VectorXd v(3 * d);
        write_observations(s, v);
        obs.row(r) = v.transpose();
    }
    return obs;
}

}  // namespace qelm::model
