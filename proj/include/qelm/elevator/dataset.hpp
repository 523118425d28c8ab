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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qelm/elevator/building.hpp"
#include "qelm/elevator/simulator.hpp"
#include "qelm/elevator/traffic.hpp"

namespace qelm::elevator {

inline constexpr int kNumFeatures = 12;
inline constexpr double kWindowSeconds = 300.0;

/**
 * Raw features of one window (index k holds f_{k+1}):
 *   f1-f3   upward calls from low / medium / high floors
 *   f4-f6   downward calls from low / medium / high floors
 *   f7, f8  mean travel distance (m) of upward / downward calls, 0 if none
 *   f9, f10 upward / downward calls in the preceding window
 *   f11,f12 upward / downward calls in this window
 */
struct FeatureWindow {
    double window_start = 0.0;
    double duration = kWindowSeconds;
    std::array<double, kNumFeatures> raw_features{};
    double awt = 0.0;
    bool empty = true;
};

struct Dataset {
    std::string label;
    std::vector<FeatureWindow> windows;

    /// Throws ValidationError if windows overlap or are out of order.
    void validate() const;
};

/// Cuts [0, day_seconds) into consecutive windows. A call belongs to the
/// window containing its arrival time.
Dataset windowize(const BuildingConfig& config, const std::vector<ServedPassenger>& served,
                  double window_seconds = kWindowSeconds, std::string label = {},
                  double day_seconds = kDaySeconds);

enum class FeatureSet { FS2, FS3a, FS3b, FS4, FS5, FS10 };

std::string to_string(FeatureSet fs);
FeatureSet parse_feature_set(const std::string& text);
const std::vector<FeatureSet>& all_feature_sets();

/// Zero-based raw feature indices, in column order.
std::vector<int> feature_indices(FeatureSet fs);

/// Column projection of a dataset ready for regression.
struct DesignMatrix {
    std::string label;
    std::vector<int> columns;  ///< zero-based raw feature indices
    Eigen::MatrixXd features;  ///< windows x columns
    Eigen::VectorXd targets;   ///< awt
    std::vector<double> window_start;

    Eigen::Index rows() const { return features.rows(); }
};

DesignMatrix select_features(const Dataset& dataset, FeatureSet fs, bool include_empty = false);

/// Row-wise concatenation (labels joined with '+').
DesignMatrix concatenate(const std::vector<const DesignMatrix*>& parts);

/// Passenger generation, simulation and windowing for one synthetic day.
Dataset synthesize_day(const BuildingConfig& config, const TrafficProfile& profile, std::uint64_t seed,
                       std::string label);

/// Header `window_start_s,f1,...,f12,awt_s,empty`.
void write_dataset_csv(std::ostream& out, const Dataset& dataset);
Dataset read_dataset_csv(std::istream& in, std::string label);
void save_dataset_csv(const std::filesystem::path& path, const Dataset& dataset);
/// Label defaults to the file stem.
Dataset load_dataset_csv(const std::filesystem::path& path);

}  // namespace qelm::elevator
