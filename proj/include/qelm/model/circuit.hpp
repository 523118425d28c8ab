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

#include <Eigen/Dense>

#include "qelm/model/encoder.hpp"
#include "qelm/model/reservoir.hpp"

namespace qelm::model {

/// 3M Pauli expectations ordered qubit-major: [<X_0>, <Y_0>, <Z_0>, <X_1>, ...].
using ObservationVector = Eigen::VectorXd;

/// Observation layout index of (qubit, axis).
inline Eigen::Index observation_index(int qubit, quantum::PauliAxis axis) {
    return 3 * qubit + static_cast<int>(axis);
}

/// |0...0> -> encoder(angles) -> reservoir -> Pauli expectations.
ObservationVector run_circuit(const EncoderCircuit& encoder, const Reservoir& reservoir,
                              const Eigen::VectorXd& angles);

ObservationVector run_circuit(const EncoderSpec& encoder, const Reservoir& reservoir, const Eigen::VectorXd& angles);

/// run_circuit for every row of `angle_rows`; returns a P x 3M matrix. Dense
/// reservoirs are applied to all encoded states in one matrix product.
Eigen::MatrixXd observe_batch(const EncoderCircuit& encoder, const Reservoir& reservoir,
                              const Eigen::MatrixXd& angle_rows);

}  // namespace qelm::model
