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

#include "qelm/stats/metrics.hpp"

#include <string>

#include "qelm/error.hpp"

namespace qelm::stats {

double mse(std::span<const double> predictions, std::span<const double> targets) {
    if (predictions.size() != targets.size()) {
        throw ShapeError("mse: " + std::to_string(predictions.size()) + " predictions vs " +
                         std::to_string(targets.size()) + " targets");
    }
    if (predictions.empty()) throw ValidationError("mse: empty input");
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double r = predictions[i] - targets[i];
        acc += r * r;
    }
    return acc / static_cast<double>(predictions.size());
}

double amse(std::span<const double> mse_values) {
    if (mse_values.empty()) throw ValidationError("amse: no MSE values");
    double acc = 0.0;
    for (double v : mse_values) acc += v;
    return acc / static_cast<double>(mse_values.size());
}

}  // namespace qelm::stats
