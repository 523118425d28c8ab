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

#include <span>

namespace qelm::stats {

/// (1/P) sum (pred - target)^2
double mse(std::span<const double> predictions, std::span<const double> targets);

/// Arithmetic mean of per-repetition MSE values.
double amse(std::span<const double> mse_values);

}  // namespace qelm::stats
