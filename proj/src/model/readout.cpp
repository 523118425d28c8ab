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

#include "qelm/model/readout.hpp"

#include <cmath>
#include <string>

#include "qelm/error.hpp"

namespace qelm::model {

double ReadoutModel::predict(const Eigen::VectorXd& observation) const {
    if (observation.size() != weights.size()) {
        throw ShapeError("readout: expected observation of length " + std::to_string(weights.size()) + ", got " +
                         std::to_string(observation.size()));
    }
    return weights.dot(observation) + (include_intercept ? intercept : 0.0);
}

Eigen::VectorXd ReadoutModel::predict_rows(const Eigen::MatrixXd& observations) const {
    if (observations.cols() != weights.size()) {
        throw ShapeError("readout: observation matrix has " + std::to_string(observations.cols()) +
                         " columns, expected " + std::to_string(weights.size()));
    }
    Eigen::VectorXd out = observations * weights;
    if (include_intercept) out.array() += intercept;
    return out;
}

ReadoutModel fit_readout(const Eigen::MatrixXd& observations, const Eigen::VectorXd& targets,
                         const ReadoutOptions& options) {
    const Eigen::Index p = observations.rows();
    const Eigen::Index k = observations.cols();
    if (p < 1 || k < 1) throw ValidationError("fit_readout: empty observation matrix");
    if (targets.size() != p) throw ShapeError("fit_readout: target count does not match observation rows");
    if (!observations.allFinite() || !targets.allFinite()) throw ValidationError("fit_readout: non-finite input");
    if (!(options.ridge_lambda >= 0.0) || !std::isfinite(options.ridge_lambda)) {
        throw ValidationError("fit_readout: ridge_lambda must be finite and >= 0");
    }

    const Eigen::Index cols = k + (options.include_intercept ? 1 : 0);
    const Eigen::Index ridge_rows = options.ridge_lambda > 0.0 ? k : 0;
    Eigen::MatrixXd design = Eigen::MatrixXd::Zero(p + ridge_rows, cols);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p + ridge_rows);
    design.topLeftCorner(p, k) = observations;
    if (options.include_intercept) design.col(k).head(p).setOnes();
    rhs.head(p) = targets;
    if (ridge_rows > 0) {
        design.bottomLeftCorner(k, k).diagonal().setConstant(std::sqrt(options.ridge_lambda));
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(design);
    const Eigen::VectorXd solution = cod.solve(rhs);

    ReadoutModel model;
    model.weights = solution.head(k);
    model.include_intercept = options.include_intercept;
    model.intercept = options.include_intercept ? solution(k) : 0.0;
    model.ridge_lambda = options.ridge_lambda;
    if (!model.weights.allFinite() || !std::isfinite(model.intercept)) {
        throw ValidationError("fit_readout: solver produced non-finite weights");
    }
    return model;
}

double predict(const ReadoutModel& model, const Eigen::VectorXd& observation) { return model.predict(observation); }

double residual_sum_of_squares(const ReadoutModel& model, const Eigen::MatrixXd& observations,
                               const Eigen::VectorXd& targets) {
    if (targets.size() != observations.rows()) throw ShapeError("rss: target count mismatch");
    return (model.predict_rows(observations) - targets).squaredNorm();
}

}  // namespace qelm::model
