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

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qelm/elevator/dataset.hpp"
#include "qelm/harness/config.hpp"
#include "qelm/stats/effect_size.hpp"
#include "qelm/stats/rank_tests.hpp"

namespace qelm::harness {

/// Test MSE of every repetition for one (held-out dataset, feature set,
/// combination) setting.
struct RunResults {
    std::string dataset;
    int fold = 0;
    elevator::FeatureSet feature_set = elevator::FeatureSet::FS2;
    Combination combination;
    std::vector<double> mse_values;
};

/// Observes every fit made during an experiment. `stage` is
/// "normalization" or "baseline"; rows are exactly the training rows the fit
/// sees. May be called from worker threads.
struct ExperimentProbe {
    std::function<void(std::string_view stage, int fold, const Eigen::MatrixXd& rows)> on_fit;
};

/// Leave-one-dataset-out folds: fold k tests on datasets[k] and trains on
/// the union of the others.
std::vector<RunResults> cross_validate(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                                       const Combination& combination, elevator::FeatureSet feature_set,
                                       const ExperimentProbe* probe = nullptr);

/// cross_validate for every (combination, feature set) pair. Cells run in
/// parallel; results come back ordered by (combination, feature set, fold)
/// as listed in the arguments.
std::vector<RunResults> run_sweep(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                                  const std::vector<Combination>& combinations,
                                  const std::vector<elevator::FeatureSet>& feature_sets,
                                  const ExperimentProbe* probe = nullptr);

struct RankedEntry {
    std::string combination;
    double amse = 0.0;
};

struct SettingRanking {
    std::string dataset;
    std::string feature_set;
    std::vector<RankedEntry> ranking;  ///< best (lowest AMSE) first
};

struct RankingTable {
    std::vector<SettingRanking> settings;
    /// combination -> {1st, 2nd, 3rd} place counts
    std::map<std::string, std::array<int, 3>> podium;
    std::string winner;
};

/// Ranks combinations by AMSE in every (dataset, feature set) setting. AMSE
/// ties break by combination name; the winner has the most first places
/// (ties again by name).
RankingTable rank_combinations(const std::vector<RunResults>& runs);

struct Rq1Result {
    std::vector<RunResults> runs;
    RankingTable ranking;
};

Rq1Result run_rq1_sweep(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                        const ExperimentProbe* probe = nullptr);

struct PairwiseComparison {
    std::string first;
    std::string second;
    double u = 0.0;
    double a12 = 0.5;
    stats::Magnitude magnitude = stats::Magnitude::Negligible;
    double p_raw = 1.0;
    double p_holm = 1.0;
    bool significant = false;
};

struct FeatureSetComparison {
    std::string dataset;
    std::string combination;
    std::vector<std::string> feature_sets;
    stats::KruskalWallisResult omnibus;
    bool pairwise_run = false;
    std::vector<PairwiseComparison> pairs;
};

inline constexpr double kAlpha = 0.05;

/// Kruskal-Wallis over the feature-set MSE samples of each dataset; when
/// p < alpha, all pairs get Mann-Whitney U with Holm-corrected p and A12.
std::vector<FeatureSetComparison> compare_feature_sets(const std::vector<RunResults>& runs,
                                                       const Combination& combination,
                                                       bool continuity_correction = true);

std::vector<FeatureSetComparison> run_rq2_comparison(const std::vector<elevator::Dataset>& datasets,
                                                     const ExperimentConfig& config, const Combination& combination,
                                                     std::vector<RunResults>* runs_out = nullptr,
                                                     const ExperimentProbe* probe = nullptr);

struct BaselineResult {
    std::string dataset;
    int fold = 0;
    double mse = 0.0;
    int splits = 0;
};

/// Regression tree on FS10 per fold, trained on the other datasets.
std::vector<BaselineResult> baseline_per_fold(const std::vector<elevator::Dataset>& datasets,
                                              const ExperimentConfig& config, const ExperimentProbe* probe = nullptr);

struct BaselineComparison {
    std::string dataset;
    std::string feature_set;
    std::string combination;
    double baseline_mse = 0.0;
    double amse = 0.0;
    std::optional<stats::WilcoxonResult> wilcoxon;  ///< empty when every run equals the baseline
    std::optional<double> cohens_d;                 ///< empty for zero-variance samples
    stats::Magnitude magnitude = stats::Magnitude::Negligible;
    int runs_above_baseline = 0;
    int runs = 0;
};

std::vector<BaselineComparison> compare_with_baseline(const std::vector<RunResults>& runs,
                                                      const std::vector<BaselineResult>& baselines,
                                                      const Combination& combination);

struct Rq3Result {
    std::vector<RunResults> runs;
    std::vector<BaselineResult> baselines;
    std::vector<BaselineComparison> comparisons;
};

Rq3Result run_rq3_baseline(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                           const Combination& combination, const ExperimentProbe* probe = nullptr);

}  // namespace qelm::harness
