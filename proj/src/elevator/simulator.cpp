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

#include "qelm/elevator/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "qelm/error.hpp"

namespace qelm::elevator {

namespace {

struct Trip {
    int origin = 0;
    int direction = 0;
    double created = 0.0;
    std::vector<std::size_t> riders;
    double door_open = 0.0;
    double end = 0.0;
    int end_floor = 0;
};

class Car {
public:
    double idle_time() const { return trips_.empty() ? 0.0 : trips_.back().end; }
    int idle_floor() const { return trips_.empty() ? 0 : trips_.back().end_floor; }
    const std::vector<Trip>& trips() const { return trips_; }

    void append(Trip trip, const std::vector<Passenger>& passengers, const BuildingConfig& cfg) {
        trips_.push_back(std::move(trip));
        retime(trips_.size() - 1, passengers, cfg);
    }

    void join(std::size_t trip, std::size_t rider, const std::vector<Passenger>& passengers,
              const BuildingConfig& cfg) {
        trips_[trip].riders.push_back(rider);
        retime(trip, passengers, cfg);
    }

private:
    void retime(std::size_t from, const std::vector<Passenger>& passengers, const BuildingConfig& cfg) {
        for (std::size_t i = from; i < trips_.size(); ++i) {
            Trip& trip = trips_[i];
            const double prev_end = i == 0 ? 0.0 : trips_[i - 1].end;
            const int prev_floor = i == 0 ? 0 : trips_[i - 1].end_floor;
            const double start = std::max(prev_end, trip.created);
            trip.door_open = start + std::abs(prev_floor - trip.origin) * cfg.floor_travel_time;

            std::vector<int> stops;
            for (auto r : trip.riders) stops.push_back(passengers[r].destination_floor);
            std::sort(stops.begin(), stops.end());
            stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
            if (trip.direction < 0) std::reverse(stops.begin(), stops.end());

            double t = trip.door_open + cfg.door_cycle_time;
            int floor = trip.origin;
            for (int stop : stops) {
                t += std::abs(stop - floor) * cfg.floor_travel_time + cfg.door_cycle_time;
                floor = stop;
            }
            trip.end = t;
            trip.end_floor = floor;
        }
    }

    std::vector<Trip> trips_;
};

}  // namespace

std::vector<ServedPassenger> simulate(const BuildingConfig& config, const std::vector<Passenger>& passengers) {
    config.validate();
    for (std::size_t i = 0; i < passengers.size(); ++i) {
        const auto& p = passengers[i];
        const std::string where = "passenger " + std::to_string(i) + ": ";
        if (p.origin_floor < 0 || p.origin_floor >= config.num_floors || p.destination_floor < 0 ||
            p.destination_floor >= config.num_floors) {
            throw ValidationError(where + "floor outside building");
        }
        if (p.origin_floor == p.destination_floor) throw ValidationError(where + "origin equals destination");
        if (!std::isfinite(p.arrival_time) || p.arrival_time < 0.0) {
            throw ValidationError(where + "arrival time must be finite and >= 0");
        }
    }

    std::vector<std::size_t> order(passengers.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return passengers[a].arrival_time < passengers[b].arrival_time;
    });

    std::vector<Car> cars(static_cast<std::size_t>(config.num_elevators));
    std::vector<std::pair<std::size_t, std::size_t>> placement(passengers.size());  // (car, trip)

    for (std::size_t idx : order) {
        const Passenger& p = passengers[idx];
        const double t = p.arrival_time;
        const int direction = p.destination_floor > p.origin_floor ? 1 : -1;

        double best_eta = std::numeric_limits<double>::infinity();
        std::size_t best_car = 0;
        std::optional<std::size_t> best_trip;
        for (std::size_t c = 0; c < cars.size(); ++c) {
            const auto& trips = cars[c].trips();
            for (std::size_t k = 0; k < trips.size(); ++k) {
                const Trip& trip = trips[k];
                if (trip.door_open >= t && trip.origin == p.origin_floor && trip.direction == direction &&
                    trip.riders.size() < static_cast<std::size_t>(config.capacity) && trip.door_open < best_eta) {
                    best_eta = trip.door_open;
                    best_car = c;
                    best_trip = k;
                }
            }
            const double append_eta = std::max(t, cars[c].idle_time()) +
                                      std::abs(cars[c].idle_floor() - p.origin_floor) * config.floor_travel_time;
            if (append_eta < best_eta) {
                best_eta = append_eta;
                best_car = c;
                best_trip.reset();
            }
        }

        Car& car = cars[best_car];
        if (best_trip) {
            car.join(*best_trip, idx, passengers, config);
            placement[idx] = {best_car, *best_trip};
        } else {
            Trip trip;
            trip.origin = p.origin_floor;
            trip.direction = direction;
            trip.created = t;
            trip.riders.push_back(idx);
            car.append(std::move(trip), passengers, config);
            placement[idx] = {best_car, car.trips().size() - 1};
        }
    }

    std::vector<ServedPassenger> served(passengers.size());
    for (std::size_t i = 0; i < passengers.size(); ++i) {
        const auto [c, k] = placement[i];
        const Trip& trip = cars[c].trips()[k];
        served[i] = {passengers[i], std::max(0.0, trip.door_open - passengers[i].arrival_time), static_cast<int>(c)};
    }
    return served;
}

}  // namespace qelm::elevator
