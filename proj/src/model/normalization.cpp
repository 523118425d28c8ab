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

#include "qelm/model/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qelm/error.hpp"

namespace qelm::model {

NormalizationParams fit_normalization(const Eigen::MatrixXd& training_features) {
    if (training_features.rows() == 0 || training_features.cols() == 0) {
        throw ValidationError("fit_normalization: empty training matrix");
    }
    if (!training_features.allFinite()) {
        throw ValidationError("fit_normalization: non-finite training value");
    }
    NormalizationParams p;
    p.min.resize(training_features.cols());
    p.max.resize(training_features.cols());
    for (Eigen::Index c = 0; c < training_features.cols(); ++c) {
        p.min[c] = training_features.col(c).minCoeff();
        p.max[c] = training_features.col(c).maxCoeff();
    }
    return p;
}

Eigen::VectorXd apply_normalization(const NormalizationParams& params, const Eigen::VectorXd& features) {
    if (static_cast<std::size_t>(features.size()) != params.num_features()) {
        throw ShapeError("apply_normalization: expected " + std::to_string(params.num_features()) +
                         " features, got " + std::to_string(features.size()));
    }
    Eigen::VectorXd angles(features.size());
    for (Eigen::Index k = 0; k < features.size(); ++k) {
        const double lo = params.min[k], hi = params.max[k];
        if (!(hi > lo)) {
            angles(k) = 0.0;
            continue;
        }
        const double unit = std::clamp((features(k) - lo) / (hi - lo), 0.0, 1.0);
        angles(k) = unit * std::numbers::pi;
    }
    return angles;
}

Eigen::MatrixXd apply_normalization_rows(const NormalizationParams& params, const Eigen::MatrixXd& rows) {
    Eigen::MatrixXd out(rows.rows(), rows.cols());
    for (Eigen::Index r = 0; r < rows.rows(); ++r) {
        out.row(r) = apply_normalization(params, Eigen::VectorXd(rows.row(r).transpose())).transpose();
    }
    return out;
}

}  // namespace qelm::model
