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

#include "qelm/elevator/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "qelm/error.hpp"

namespace qelm::elevator {

void TrafficProfile::validate() const {
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        const std::string where = "traffic segment " + std::to_string(i) + ": ";
        if (!std::isfinite(s.start_s) || !std::isfinite(s.end_s) || s.start_s < 0.0 || s.end_s > kDaySeconds ||
            !(s.start_s < s.end_s)) {
            throw ValidationError(where + "interval must satisfy 0 <= start < end <= 86400");
        }
        if (!(s.rate_per_min >= 0.0) || !std::isfinite(s.rate_per_min)) {
            throw ValidationError(where + "rate_per_min must be finite and >= 0");
        }
        if (s.up_fraction < 0.0 || s.down_fraction < 0.0 || s.interfloor_fraction < 0.0) {
            throw ValidationError(where + "mix fractions must be >= 0");
        }
        const double total = s.up_fraction + s.down_fraction + s.interfloor_fraction;
        if (std::abs(total - 1.0) > 1e-9) throw ValidationError(where + "mix fractions must sum to 1");
    }
}

TrafficProfile office_day_profile(int variant, double rate_scale) {
    // variant shifts peaks by up to 15 minutes and scales intensity by +-10%
    const double shift = 300.0 * static_cast<double>(variant % 4) - 450.0;
    const double scale = rate_scale * (0.9 + 0.0667 * static_cast<double>(variant % 4));
    auto h = [](double hours) { return hours * 3600.0; };
    auto seg = [&](double a, double b, double rate, double up, double down) {
        const double start = std::clamp(a + shift, 0.0, kDaySeconds);
        const double end = std::clamp(b + shift, 0.0, kDaySeconds);
        return TrafficSegment{start, end, rate * scale, up, down, 1.0 - up - down};
    };
    TrafficProfile p;
    p.segments = {
        seg(h(6.5), h(7.5), 1.5, 0.7, 0.1),
        seg(h(7.5), h(8.25), 5.0, 0.85, 0.05),
        seg(h(8.25), h(9.25), 7.5, 0.8, 0.05),
        seg(h(9.25), h(11.75), 2.0, 0.3, 0.3),
        seg(h(11.75), h(12.75), 5.5, 0.2, 0.55),
        seg(h(12.75), h(13.75), 5.5, 0.55, 0.2),
        seg(h(13.75), h(16.75), 2.0, 0.3, 0.3),
        seg(h(16.75), h(17.75), 7.0, 0.05, 0.8),
        seg(h(17.75), h(18.75), 4.0, 0.1, 0.75),
        seg(h(18.75), h(20.5), 1.0, 0.2, 0.6),
    };
    return p;
}

std::vector<Passenger> generate_traffic(const BuildingConfig& config, const TrafficProfile& profile,
                                        std::uint64_t seed) {
    config.validate();
    profile.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> weight(75.0, 15.0);
    const int floors = config.num_floors;
    std::uniform_int_distribution<int> upper(1, floors - 1);
    std::uniform_int_distribution<int> any_floor(0, floors - 1);

    std::vector<Passenger> out;
    for (const auto& s : profile.segments) {
        if (s.rate_per_min <= 0.0) continue;
        std::exponential_distribution<double> gap(s.rate_per_min / 60.0);
        double t = s.start_s;
        while (true) {
            t += gap(rng);
            if (t >= s.end_s) break;
            Passenger p;
            p.arrival_time = t;
            const double u = unit(rng);
            if (u < s.up_fraction) {
                p.origin_floor = 0;
                p.destination_floor = upper(rng);
            } else if (u < s.up_fraction + s.down_fraction) {
                p.origin_floor = upper(rng);
                p.destination_floor = 0;
            } else {
                p.origin_floor = any_floor(rng);
                do {
                    p.destination_floor = any_floor(rng);
                } while (p.destination_floor == p.origin_floor);
            }
            p.weight = std::max(30.0, weight(rng));
            out.push_back(p);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Passenger& a, const Passenger& b) { return a.arrival_time < b.arrival_time; });
    return out;
}

nlohmann::json to_json(const TrafficProfile& profile) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : profile.segments) {
        segs.push_back({{"start_s", s.start_s},
                        {"end_s", s.end_s},
                        {"rate_per_min", s.rate_per_min},
                        {"up_fraction", s.up_fraction},
                        {"down_fraction", s.down_fraction},
                        {"interfloor_fraction", s.interfloor_fraction}});
    }
    return {{"segments", std::move(segs)}};
}

TrafficProfile profile_from_json(const nlohmann::json& doc) {
    TrafficProfile p;
    for (const auto& s : doc.at("segments")) {
        p.segments.push_back({s.at("start_s").get<double>(), s.at("end_s").get<double>(),
                              s.at("rate_per_min").get<double>(), s.at("up_fraction").get<double>(),
                              s.at("down_fraction").get<double>(), s.at("interfloor_fraction").get<double>()});
    }
    p.validate();
    return p;
}

void write_passenger_csv(std::ostream& out, const std::vector<Passenger>& passengers) {
    out << "arrival_time_s,origin_floor,dest_floor,weight_kg\n";
    char buf[128];
    for (const auto& p : passengers) {
        std::snprintf(buf, sizeof buf, "%.17g,%d,%d,%.17g\n", p.arrival_time, p.origin_floor, p.destination_floor,
                      p.weight);
        out << buf;
    }
}

std::vector<Passenger> read_passenger_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("arrival_time_s,origin_floor,dest_floor,weight_kg", 0) != 0) {
        throw ValidationError("passenger csv: missing or wrong header");
    }
    std::vector<Passenger> out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) continue;
        std::istringstream ss(line);
        Passenger p;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(ss >> p.arrival_time >> c1 >> p.origin_floor >> c2 >> p.destination_floor >> c3 >> p.weight) ||
            c1 != ',' || c2 != ',' || c3 != ',') {
            throw ValidationError("passenger csv: malformed row " + std::to_string(row));
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace qelm::elevator
