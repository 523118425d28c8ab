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

#include "qelm/elevator/building.hpp"

#include <cmath>
#include <string>

#include "qelm/error.hpp"

namespace qelm::elevator {

void BuildingConfig::validate() const {
    if (num_floors < 3) throw ConfigurationError("building.num_floors must be >= 3");
    if (num_elevators < 1) throw ConfigurationError("building.num_elevators must be >= 1");
    if (!(floor_travel_time > 0.0) || !std::isfinite(floor_travel_time)) {
        throw ConfigurationError("building.floor_travel_time must be > 0");
    }
    if (!(door_cycle_time > 0.0) || !std::isfinite(door_cycle_time)) {
        throw ConfigurationError("building.door_cycle_time must be > 0");
    }
    if (capacity < 1) throw ConfigurationError("building.capacity must be >= 1");
    if (!(floor_height > 0.0) || !std::isfinite(floor_height)) {
        throw ConfigurationError("building.floor_height must be > 0");
    }
}

Tier TierPartition::tier_of(int floor) const {
    if (floor < low_end) return Tier::Low;
    if (floor >= high_begin) return Tier::High;
    return Tier::Medium;
}

TierPartition tier_partition(int num_floors) {
    if (num_floors < 3) throw ConfigurationError("tier_partition: need at least 3 floors");
    const int third = (num_floors + 2) / 3;
    return {third, num_floors - third};
}

nlohmann::json to_json(const BuildingConfig& c) {
    return {{"num_floors", c.num_floors},
            {"num_elevators", c.num_elevators},
            {"floor_travel_time", c.floor_travel_time},
            {"door_cycle_time", c.door_cycle_time},
            {"capacity", c.capacity},
            {"floor_height", c.floor_height}};
}

BuildingConfig building_from_json(const nlohmann::json& doc) {
    BuildingConfig c;
    c.num_floors = doc.value("num_floors", c.num_floors);
    c.num_elevators = doc.value("num_elevators", c.num_elevators);
    c.floor_travel_time = doc.value("floor_travel_time", c.floor_travel_time);
    c.door_cycle_time = doc.value("door_cycle_time", c.door_cycle_time);
    c.capacity = doc.value("capacity", c.capacity);
    c.floor_height = doc.value("floor_height", c.floor_height);
    c.validate();
    return c;
}

}  // namespace qelm::elevator
