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
#include <vector>

namespace qelm::stats {

/// Mid-ranks (1-based, ties averaged) of `values` in their original order.
std::vector<double> average_ranks(std::span<const double> values);

/// sum over tie groups of (t^3 - t).
double tie_term(std::span<const double> values);

struct MannWhitneyResult {
    double u = 0.0;  ///< U statistic of the first sample
    double z = 0.0;
    double p = 1.0;  ///< two-sided, normal approximation
};

struct MannWhitneyOptions {
    bool continuity_correction = true;
};

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                 const MannWhitneyOptions& options = {});

struct KruskalWallisResult {
    double h = 0.0;  ///< tie-corrected
    double p = 1.0;  ///< chi-square upper tail with k - 1 degrees of freedom
    int degrees_of_freedom = 0;
};

KruskalWallisResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

struct WilcoxonResult {
    double w = 0.0;  ///< min(W+, W-)
    double w_plus = 0.0;
    double w_minus = 0.0;
    double z = 0.0;
    double p = 1.0;  ///< two-sided, normal approximation with tie correction
    std::size_t n_used = 0;  ///< non-zero differences
};

/// Signed-rank test of (x_i - reference); zero differences are dropped.
/// Throws DegenerateInputError when every difference is zero.
WilcoxonResult wilcoxon_one_sample(std::span<const double> sample, double reference);

/// Holm step-down adjusted p-values, returned in input order.
std::vector<double> holm_bonferroni(std::span<const double> p_values);

}  // namespace qelm::stats
