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

namespace qelm::model {

struct ReadoutOptions {
    double ridge_lambda = 0.0;
    bool include_intercept = false;
};

/// Linear output layer t_pre = W . V (+ intercept).
struct ReadoutModel {
    Eigen::VectorXd weights;
    bool include_intercept = false;
    double intercept = 0.0;
    double ridge_lambda = 0.0;

    double predict(const Eigen::VectorXd& observation) const;
    Eigen::VectorXd predict_rows(const Eigen::MatrixXd& observations) const;
};

/// Minimizes sum_j (W . V_j - t_j)^2 + lambda |W|^2 with a complete
/// orthogonal decomposition, returning the minimum-norm solution for
/// rank-deficient systems. The intercept, when enabled, is not penalized.
ReadoutModel fit_readout(const Eigen::MatrixXd& observations, const Eigen::VectorXd& targets,
                         const ReadoutOptions& options = {});

double predict(const ReadoutModel& model, const Eigen::VectorXd& observation);

double residual_sum_of_squares(const ReadoutModel& model, const Eigen::MatrixXd& observations,
                               const Eigen::VectorXd& targets);

}  // namespace qelm::model
