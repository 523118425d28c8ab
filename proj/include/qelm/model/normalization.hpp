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

#include <vector>

#include <Eigen/Dense>

namespace qelm::model {

/// Per-feature min-max range learned from training rows. Maps raw feature
/// values onto rotation angles in [0, pi].
struct NormalizationParams {
    std::vector<double> min;
    std::vector<double> max;

    std::size_t num_features() const { return min.size(); }
};

/// Rows are windows, columns features. Throws ValidationError on an empty
/// matrix or non-finite entries.
NormalizationParams fit_normalization(const Eigen::MatrixXd& training_features);

/// Linear map min -> 0, max -> pi. Values outside the training range are
/// clamped; a constant training feature maps to 0.
Eigen::VectorXd apply_normalization(const NormalizationParams& params, const Eigen::VectorXd& features);

/// Row-wise apply_normalization.
Eigen::MatrixXd apply_normalization_rows(const NormalizationParams& params, const Eigen::MatrixXd& rows);

}  // namespace qelm::model
