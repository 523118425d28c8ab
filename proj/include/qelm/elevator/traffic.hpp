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
#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "qelm/elevator/building.hpp"

namespace qelm::elevator {

inline constexpr double kDaySeconds = 86400.0;

struct Passenger {
    double arrival_time = 0.0;  ///< seconds from day start
    int origin_floor = 0;
    int destination_floor = 0;
    double weight = 0.0;  ///< kg; never used as a feature

    bool operator==(const Passenger&) const = default;
};

/// Piecewise-constant arrival intensity with an up/down/interfloor mix.
/// Up-peak traffic originates at the ground floor, down-peak traffic ends
/// there, interfloor traffic moves between two distinct random floors.
struct TrafficSegment {
    double start_s = 0.0;
    double end_s = 0.0;
    double rate_per_min = 0.0;
    double up_fraction = 1.0;
    double down_fraction = 0.0;
    double interfloor_fraction = 0.0;
};

struct TrafficProfile {
    std::vector<TrafficSegment> segments;

    /// Throws ValidationError (negative rate, bad interval, mix not summing to 1).
    void validate() const;
};

/// Office-style day: morning up-peak, lunch two-way traffic, evening
/// down-peak and light interfloor background. `variant` in [0, 4) shifts the
/// peaks and scales the load mildly so four days differ.
TrafficProfile office_day_profile(int variant, double rate_scale = 1.0);

/// Poisson arrivals per segment, sorted by arrival time. Pure function of
/// (config, profile, seed).
std::vector<Passenger> generate_traffic(const BuildingConfig& config, const TrafficProfile& profile,
                                        std::uint64_t seed);

nlohmann::json to_json(const TrafficProfile& profile);
TrafficProfile profile_from_json(const nlohmann::json& doc);

/// Header `arrival_time_s,origin_floor,dest_floor,weight_kg`.
void write_passenger_csv(std::ostream& out, const std::vector<Passenger>& passengers);
std::vector<Passenger> read_passenger_csv(std::istream& in);

}  // namespace qelm::elevator
