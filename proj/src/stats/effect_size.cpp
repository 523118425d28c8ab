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

#include "qelm/stats/effect_size.hpp"

#include <cmath>

#include "qelm/error.hpp"

namespace qelm::stats {

std::string to_string(Magnitude m) {
    switch (m) {
        case Magnitude::Negligible: return "negligible";
        case Magnitude::Small: return "small";
        case Magnitude::Medium: return "medium";
        case Magnitude::Large: return "large";
    }
    return "?";
}

double vargha_delaney_a12(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw ValidationError("vargha_delaney_a12: empty sample");
    double wins = 0.0;
    for (double x : a) {
        for (double y : b) {
            if (x > y) {
                wins += 1.0;
            } else if (x == y) {
                wins += 0.5;
            }
        }
    }
    return wins / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

Magnitude a12_magnitude(double a) {
    if (a <= 0.29 || a >= 0.71) return Magnitude::Large;
    if (a <= 0.34 || a >= 0.64) return Magnitude::Medium;
    if (a <= 0.44 || a >= 0.56) return Magnitude::Small;
    return Magnitude::Negligible;
}

double cohens_d_one_sample(std::span<const double> sample, double reference) {
    if (sample.size() < 2) throw ValidationError("cohens_d_one_sample: need at least 2 values");
    double mean = 0.0;
    for (double x : sample) mean += x;
    mean /= static_cast<double>(sample.size());
    double ss = 0.0;
    for (double x : sample) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / static_cast<double>(sample.size() - 1));
    if (!(sd > 0.0)) throw DegenerateInputError("cohens_d_one_sample: zero variance");
    return (mean - reference) / sd;
}

Magnitude cohens_d_magnitude(double d) {
    const double m = std::abs(d);
    if (m == 0.0) return Magnitude::Negligible;
    if (m < 0.2) return Magnitude::Small;
    if (m <= 0.8) return Magnitude::Medium;
    return Magnitude::Large;
}

}  // namespace qelm::stats
