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

#include <vector>

#include "qelm/elevator/building.hpp"
#include "qelm/elevator/traffic.hpp"

namespace qelm::elevator {

struct ServedPassenger {
    Passenger passenger;
    double waiting_time = 0.0;  ///< call until the assigned car starts opening its doors
    int car = 0;
};

/**
 * Discrete-event group simulation with a nearest-car dispatcher.
 *
 * All cars start idle at floor 0. Each car executes a queue of trips; a trip
 * drives to one origin floor, opens its doors once to board everyone
 * assigned to it, then visits the riders' destinations in travel order with
 * one door cycle per stop. A hall call at time t is assigned, without later
 * reassignment, to the car with the smallest estimated door-open time at the
 * origin:
 *   - joining a trip whose doors have not yet opened at that origin in the
 *     same direction, while it has room (full trips reject new riders), or
 *   - appending a new trip after the car's queue.
 * Ties go to the lowest car index.
 *
 * Returns one entry per input passenger, in input order.
 */
std::vector<ServedPassenger> simulate(const BuildingConfig& config, const std::vector<Passenger>& passengers);

}  // namespace qelm::elevator
