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

#include "json.hpp"

namespace qelm::elevator {

struct BuildingConfig {
    int num_floors = 10;
    int num_elevators = 3;
    double floor_travel_time = 2.0;  ///< seconds per floor
    double door_cycle_time = 8.0;    ///< seconds, open + close
    int capacity = 12;               ///< passengers per car
    double floor_height = 3.0;       ///< meters per floor

    /// Throws ConfigurationError naming the offending field.
    void validate() const;
};

enum class Tier { Low = 0, Medium = 1, High = 2 };

/// Contiguous floor tiers: low = [0, ceil(F/3)), high = top ceil(F/3)
/// floors, medium = the rest.
struct TierPartition {
    int low_end = 0;     ///< first floor not in the low tier
    int high_begin = 0;  ///< first floor of the high tier

    Tier tier_of(int floor) const;
};

TierPartition tier_partition(int num_floors);

nlohmann::json to_json(const BuildingConfig& config);
BuildingConfig building_from_json(const nlohmann::json& doc);

}  // namespace qelm::elevator
