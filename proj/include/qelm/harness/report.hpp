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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qelm/harness/experiment.hpp"

namespace qelm::harness {

/// Header `dataset,feature_set,encoder,reservoir,repetition,mse`; one row per
/// repetition, values printed with 17 significant digits.
void write_raw_results_csv(std::ostream& out, const std::vector<RunResults>& runs);

/// Inverse of write_raw_results_csv. Folds are numbered by first appearance
/// of each dataset.
std::vector<RunResults> read_raw_results_csv(std::istream& in);

void save_raw_results(const std::filesystem::path& path, const std::vector<RunResults>& runs);
std::vector<RunResults> load_raw_results(const std::filesystem::path& path);

void write_baselines_csv(std::ostream& out, const std::vector<BaselineResult>& baselines);
std::vector<BaselineResult> read_baselines_csv(std::istream& in);

nlohmann::json to_json(const RankingTable& table);
void write_ranking_text(std::ostream& out, const RankingTable& table);

nlohmann::json to_json(const std::vector<FeatureSetComparison>& comparisons);
/// Lower-triangular A12 table per dataset; cells whose Holm-corrected p is
/// not below alpha carry a trailing '*'.
void write_heatmap_text(std::ostream& out, const std::vector<FeatureSetComparison>& comparisons);

nlohmann::json to_json(const std::vector<BaselineComparison>& comparisons, const std::vector<BaselineResult>& baselines);
void write_baseline_text(std::ostream& out, const std::vector<BaselineComparison>& comparisons,
                         const std::vector<BaselineResult>& baselines);

/// Writes `text` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace qelm::harness
