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
#include <string>

namespace qelm::stats {

enum class Magnitude { Negligible, Small, Medium, Large };

std::string to_string(Magnitude m);

/// Vargha-Delaney A12: P(a > b) + 0.5 P(a == b) over all cross pairs.
/// Values below 0.5 mean the first sample tends to be smaller.
double vargha_delaney_a12(std::span<const double> a, std::span<const double> b);

/// Small (0.34,0.44] u [0.56,0.64), Medium (0.29,0.34] u [0.64,0.71),
/// Large [0,0.29] u [0.71,1], Negligible otherwise.
Magnitude a12_magnitude(double a12);

/// (mean(sample) - reference) / sd(sample), sd with n - 1 denominator.
/// Negative when the sample lies below the reference.
double cohens_d_one_sample(std::span<const double> sample, double reference);

/// Small 0 < |d| < 0.2, Medium 0.2 <= |d| <= 0.8, Large |d| > 0.8.
Magnitude cohens_d_magnitude(double d);

}  // namespace qelm::stats
