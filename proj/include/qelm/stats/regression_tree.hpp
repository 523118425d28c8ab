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

namespace qelm::stats {

struct TreeOptions {
    int max_splits = 25;
    int min_leaf_size = 1;
    int min_parent_size = 10;
};

/// CART regression tree grown best-first: each step splits the leaf whose
/// best split gives the largest reduction in squared error, until
/// max_splits splits exist or no leaf can improve.
class RegressionTree {
public:
    struct Node {
        int feature = -1;  ///< -1 for leaves
        double threshold = 0.0;  ///< x[feature] < threshold goes left
        int left = -1;
        int right = -1;
        double value = 0.0;  ///< mean target of the node's training rows
        std::size_t count = 0;
    };

    const std::vector<Node>& nodes() const { return nodes_; }
    int num_splits() const { return splits_; }
    int num_features() const { return num_features_; }

    double predict(const Eigen::VectorXd& x) const;
    Eigen::VectorXd predict_rows(const Eigen::MatrixXd& rows) const;

private:
    friend RegressionTree fit_regression_tree(const Eigen::MatrixXd&, const Eigen::VectorXd&, const TreeOptions&);

    std::vector<Node> nodes_;
    int splits_ = 0;
    int num_features_ = 0;
};

/// Exhaustive split search over midpoints of sorted unique feature values;
/// ties resolve to the lowest feature index, then the lowest threshold.
RegressionTree fit_regression_tree(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets,
                                   const TreeOptions& options = {});

double predict_tree(const RegressionTree& tree, const Eigen::VectorXd& x);

}  // namespace qelm::stats
