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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qelm/elevator/building.hpp"
#include "qelm/elevator/dataset.hpp"
#include "qelm/elevator/traffic.hpp"
#include "qelm/model/encoder.hpp"
#include "qelm/model/reservoir.hpp"

namespace qelm::harness {

/// Encoder/reservoir pair, named "DHE+ISING" etc.
struct Combination {
    model::EncoderKind encoder = model::EncoderKind::DHE;
    model::ReservoirKind reservoir = model::ReservoirKind::ISING;

    std::string name() const;
    static Combination parse(const std::string& text);

    bool operator==(const Combination&) const = default;
};

/// The 8 combinations, DHE first, reservoirs in CNOT, HAAR, ISING, ROTATION order.
const std::vector<Combination>& all_combinations();

/// Either a CSV on disk or a synthetic day to generate.
struct DatasetSource {
    std::string label;
    std::optional<std::filesystem::path> path;
    std::uint64_t seed = 0;
    int profile_variant = 0;
    double rate_scale = 1.0;
    std::optional<elevator::TrafficProfile> profile;
};

struct ExperimentConfig {
    std::vector<DatasetSource> datasets;
    elevator::BuildingConfig building;
    std::vector<elevator::FeatureSet> feature_sets;
    std::vector<Combination> combinations;
    int repetitions = 30;
    std::map<elevator::FeatureSet, int> repetition_overrides;
    int encoder_depth = 1;
    int reservoir_depth = 10;
    double ising_time_step = 1.0;
    double ridge_lambda = 0.0;
    bool include_intercept = false;
    bool include_empty_windows = false;
    std::uint64_t master_seed = 0;
    std::filesystem::path output_dir = "results";
    Combination study_combination;  ///< used by the feature-set and baseline comparisons
    int baseline_max_splits = 25;
    bool mwu_continuity_correction = true;
    int threads = 0;  ///< 0 = hardware concurrency

    int repetitions_for(elevator::FeatureSet fs) const;

    /// Throws ConfigurationError naming the offending field.
    void validate() const;
};

/// Four synthetic office days, seeds and profile variants fixed.
std::vector<DatasetSource> default_dataset_sources();

/// Relative dataset paths resolve against base_dir. Missing fields take
/// their defaults; malformed fields raise ConfigurationError naming them.
ExperimentConfig config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// Loads or synthesizes every dataset in the config.
std::vector<elevator::Dataset> materialize_datasets(const ExperimentConfig& config);

}  // namespace qelm::harness
