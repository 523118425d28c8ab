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

#include "qelm/stats/regression_tree.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "qelm/error.hpp"

namespace qelm::stats {

namespace {

struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

struct Leaf {
    int node = 0;
    std::vector<Eigen::Index> rows;
    std::optional<Split> best;
};

double node_sse(const Eigen::VectorXd& y, const std::vector<Eigen::Index>& rows, double mean) {
    double acc = 0.0;
    for (auto r : rows) acc += (y(r) - mean) * (y(r) - mean);
    return acc;
}

std::optional<Split> best_split(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                const std::vector<Eigen::Index>& rows, const TreeOptions& opt) {
    const auto n = rows.size();
    if (n < static_cast<std::size_t>(std::max(opt.min_parent_size, 2))) return std::nullopt;
    double total = 0.0, lo_y = y(rows.front()), hi_y = lo_y;
    for (auto r : rows) {
        total += y(r);
        lo_y = std::min(lo_y, y(r));
        hi_y = std::max(hi_y, y(r));
    }
    // a pure node can show a rounding-level SSE; never split it
    if (lo_y == hi_y) return std::nullopt;
    const double mean = total / static_cast<double>(n);
    const double parent = node_sse(y, rows, mean);
    if (!(parent > 0.0)) return std::nullopt;

    std::optional<Split> best;
    std::vector<Eigen::Index> sorted = rows;
    for (Eigen::Index f = 0; f < x.cols(); ++f) {
        std::stable_sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return x(a, f) < x(b, f); });
        // centered sums keep the SSE arithmetic well conditioned
        double left_sum = 0.0, left_sq = 0.0;
        double right_sum = 0.0, right_sq = 0.0;
        for (auto r : sorted) {
            const double c = y(r) - mean;
            right_sum += c;
            right_sq += c * c;
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double c = y(sorted[i]) - mean;
            left_sum += c;
            left_sq += c * c;
            right_sum -= c;
            right_sq -= c * c;
            const double lo = x(sorted[i], f), hi = x(sorted[i + 1], f);
            if (!(lo < hi)) continue;
            const auto nl = static_cast<double>(i + 1), nr = static_cast<double>(n - i - 1);
            if (nl < opt.min_leaf_size || nr < opt.min_leaf_size) continue;
            const double children = (left_sq - left_sum * left_sum / nl) + (right_sq - right_sum * right_sum / nr);
            const double gain = parent - children;
            if (gain > 1e-12 * parent && (!best || gain > best->gain)) {
                best = Split{static_cast<int>(f), 0.5 * (lo + hi), gain};
            }
        }
    }
    return best;
}

}  // namespace

double RegressionTree::predict(const Eigen::VectorXd& x) const {
    if (x.size() != num_features_) {
        throw ShapeError("regression tree: expected " + std::to_string(num_features_) + " features");
    }
    int at = 0;
    while (nodes_[at].feature >= 0) {
        at = x(nodes_[at].feature) < nodes_[at].threshold ? nodes_[at].left : nodes_[at].right;
    }
    return nodes_[at].value;
}

Eigen::VectorXd RegressionTree::predict_rows(const Eigen::MatrixXd& rows) const {
    Eigen::VectorXd out(rows.rows());
    for (Eigen::Index r = 0; r < rows.rows(); ++r) out(r) = predict(Eigen::VectorXd(rows.row(r).transpose()));
    return out;
}

RegressionTree fit_regression_tree(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets,
                                   const TreeOptions& options) {
    if (features.rows() == 0 || features.cols() == 0) throw ValidationError("regression tree: empty data");
    if (targets.size() != features.rows()) throw ShapeError("regression tree: target count mismatch");
    if (!features.allFinite() || !targets.allFinite()) throw ValidationError("regression tree: non-finite input");
    if (options.max_splits < 0 || options.min_leaf_size < 1) {
        throw ConfigurationError("regression tree: max_splits >= 0 and min_leaf_size >= 1 required");
    }

    RegressionTree tree;
    tree.num_features_ = static_cast<int>(features.cols());
    auto make_node = [&](const std::vector<Eigen::Index>& rows) {
        RegressionTree::Node node;
        double s = 0.0;
        for (auto r : rows) s += targets(r);
        node.value = s / static_cast<double>(rows.size());
        node.count = rows.size();
        tree.nodes_.push_back(node);
        return static_cast<int>(tree.nodes_.size() - 1);
    };

    std::vector<Eigen::Index> all(static_cast<std::size_t>(features.rows()));
    std::iota(all.begin(), all.end(), Eigen::Index{0});
    std::vector<Leaf> leaves;
    leaves.push_back({make_node(all), all, std::nullopt});
    leaves.back().best = best_split(features, targets, leaves.back().rows, options);

    while (tree.splits_ < options.max_splits) {
        // leaves stay in creation order, so strict '>' keeps the oldest on ties
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            if (leaves[i].best && (!pick || leaves[i].best->gain > leaves[*pick].best->gain)) pick = i;
        }
        if (!pick) break;
        Leaf leaf = std::move(leaves[*pick]);
        leaves.erase(leaves.begin() + static_cast<long>(*pick));

        const Split split = *leaf.best;
        std::vector<Eigen::Index> left, right;
        for (auto r : leaf.rows) (features(r, split.feature) < split.threshold ? left : right).push_back(r);
        const int l = make_node(left);
        const int r = make_node(right);
        auto& parent = tree.nodes_[leaf.node];
        parent.feature = split.feature;
        parent.threshold = split.threshold;
        parent.left = l;
        parent.right = r;
        ++tree.splits_;

        leaves.push_back({l, std::move(left), std::nullopt});
        leaves.back().best = best_split(features, targets, leaves.back().rows, options);
        leaves.push_back({r, std::move(right), std::nullopt});
        leaves.back().best = best_split(features, targets, leaves.back().rows, options);
    }
    return tree;
}

double predict_tree(const RegressionTree& tree, const Eigen::VectorXd& x) { return tree.predict(x); }

}  // namespace qelm::stats
