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

#include <cmath>
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "qelm/elevator/building.hpp"
#include "qelm/elevator/dataset.hpp"
#include "qelm/elevator/simulator.hpp"
#include "qelm/elevator/traffic.hpp"
#include "qelm/error.hpp"

namespace {

using namespace qelm::elevator;

Passenger call(double t, int from, int to) { return {t, from, to, 70.0}; }

TrafficProfile constant_profile(double rate, double end_s = 3600.0, double up = 1.0, double down = 0.0) {
    return {{{0.0, end_s, rate, up, down, 1.0 - up - down}}};
}

double mean_wait(const std::vector<ServedPassenger>& served) {
    double s = 0;
    for (const auto& p : served) s += p.waiting_time;
    return served.empty() ? 0.0 : s / static_cast<double>(served.size());
}

TEST(Building, TierPartitionCoversFloorsOnce) {
    for (int f = 3; f <= 40; ++f) {
        const auto tp = tier_partition(f);
        EXPECT_EQ(tp.low_end, (f + 2) / 3);
        EXPECT_EQ(tp.high_begin, f - (f + 2) / 3);
        int counts[3] = {0, 0, 0};
        for (int floor = 0; floor < f; ++floor) ++counts[static_cast<int>(tp.tier_of(floor))];
        EXPECT_EQ(counts[0] + counts[1] + counts[2], f);
        EXPECT_GT(counts[0], 0);
        EXPECT_GT(counts[2], 0);
    }
    const auto ten = tier_partition(10);
    EXPECT_EQ(ten.tier_of(3), Tier::Low);
    EXPECT_EQ(ten.tier_of(4), Tier::Medium);
    EXPECT_EQ(ten.tier_of(6), Tier::High);
}

TEST(Building, ValidationNamesField) {
    BuildingConfig c;
    c.num_floors = 2;
    try {
        c.validate();
        FAIL();
    } catch (const qelm::ConfigurationError& e) {
        EXPECT_NE(std::string(e.what()).find("num_floors"), std::string::npos);
    }
    c = {};
    c.capacity = 0;
    EXPECT_THROW(c.validate(), qelm::ConfigurationError);
}

TEST(Traffic, ZeroIntensityIsEmpty) {
    EXPECT_TRUE(generate_traffic({}, constant_profile(0.0, 86400.0), 1).empty());
}

TEST(Traffic, PoissonCountWithinThreeSigma) {
    const auto p = generate_traffic({}, constant_profile(6.0), 0);
    EXPECT_LE(std::abs(static_cast<double>(p.size()) - 360.0), 3 * std::sqrt(360.0));
}

TEST(Traffic, CountsArePoissonDistributed) {
    const int n = 400;
    double sum = 0, sq = 0;
    for (int seed = 0; seed < n; ++seed) {
        const auto c = static_cast<double>(generate_traffic({}, constant_profile(6.0), static_cast<std::uint64_t>(seed)).size());
        sum += c;
        sq += c * c;
    }
    const double mean = sum / n, var = sq / n - mean * mean;
    EXPECT_NEAR(mean, 360.0, 4 * std::sqrt(360.0 / n));
    EXPECT_GT(var / 360.0, 0.75);
    EXPECT_LT(var / 360.0, 1.3);
}

TEST(Traffic, DeterministicSortedAndValid) {
    BuildingConfig cfg;
    const auto profile = office_day_profile(1);
    const auto a = generate_traffic(cfg, profile, 5);
    EXPECT_EQ(a, generate_traffic(cfg, profile, 5));
    EXPECT_NE(a, generate_traffic(cfg, profile, 6));
    ASSERT_FALSE(a.empty());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) {
            EXPECT_LE(a[i - 1].arrival_time, a[i].arrival_time);
        }
        EXPECT_NE(a[i].origin_floor, a[i].destination_floor);
        EXPECT_GE(a[i].origin_floor, 0);
        EXPECT_LT(a[i].destination_floor, cfg.num_floors);
        EXPECT_GE(a[i].arrival_time, 0.0);
        EXPECT_LT(a[i].arrival_time, kDaySeconds);
    }
}

TEST(Traffic, PeakDirections) {
    const auto up = generate_traffic({}, constant_profile(5.0, 3600.0, 1.0, 0.0), 2);
    for (const auto& p : up) EXPECT_EQ(p.origin_floor, 0);
    const auto down = generate_traffic({}, constant_profile(5.0, 3600.0, 0.0, 1.0), 2);
    for (const auto& p : down) EXPECT_EQ(p.destination_floor, 0);
}

TEST(Traffic, InvalidProfileRejected) {
    EXPECT_THROW(generate_traffic({}, constant_profile(-1.0), 1), qelm::ValidationError);
    TrafficProfile bad{{{100.0, 50.0, 1.0, 1.0, 0.0, 0.0}}};
    EXPECT_THROW(bad.validate(), qelm::ValidationError);
    TrafficProfile mix{{{0.0, 50.0, 1.0, 0.5, 0.0, 0.0}}};
    EXPECT_THROW(mix.validate(), qelm::ValidationError);
}

TEST(Traffic, CsvAndJsonRoundTrip) {
    const auto a = generate_traffic({}, office_day_profile(0), 3);
    std::stringstream s;
    write_passenger_csv(s, a);
    EXPECT_EQ(read_passenger_csv(s), a);
    const auto profile = office_day_profile(2, 1.5);
    const auto back = profile_from_json(to_json(profile));
    ASSERT_EQ(back.segments.size(), profile.segments.size());
    EXPECT_EQ(back.segments[3].rate_per_min, profile.segments[3].rate_per_min);
}

TEST(Simulator, SinglePassengerClosedForm) {
    BuildingConfig cfg;
    cfg.num_elevators = 1;
    cfg.floor_travel_time = 1.0;
    EXPECT_DOUBLE_EQ(simulate(cfg, {call(10, 0, 4)})[0].waiting_time, 0.0);
    EXPECT_DOUBLE_EQ(simulate(cfg, {call(10, 5, 0)})[0].waiting_time, 5.0);
    cfg.floor_travel_time = 2.5;
    EXPECT_DOUBLE_EQ(simulate(cfg, {call(0, 7, 2)})[0].waiting_time, 17.5);
}

TEST(Simulator, SecondCallWaitsForTripCompletion) {
    BuildingConfig cfg;
    cfg.num_elevators = 1;
    cfg.floor_travel_time = 2.0;
    cfg.door_cycle_time = 8.0;
    // car opens at 0 at t=0, rides to 5 (opens at 18, free at 26), then drives 2 floors down to 3
    const auto s = simulate(cfg, {call(0, 0, 5), call(1, 3, 0)});
    EXPECT_DOUBLE_EQ(s[0].waiting_time, 0.0);
    EXPECT_DOUBLE_EQ(s[1].waiting_time, 26.0 + 4.0 - 1.0);
}

TEST(Simulator, SimultaneousCallsAtIdleCars) {
    BuildingConfig cfg;
    cfg.num_elevators = 2;
    const auto s = simulate(cfg, {call(0, 0, 5), call(1, 0, 3), call(1000, 5, 0), call(1000, 3, 0)});
    EXPECT_EQ(s[0].car, 0);
    EXPECT_EQ(s[1].car, 1);
    EXPECT_DOUBLE_EQ(s[2].waiting_time, 0.0);
    EXPECT_DOUBLE_EQ(s[3].waiting_time, 0.0);
    EXPECT_NE(s[2].car, s[3].car);
}

TEST(Simulator, JoinsPendingPickupUntilFull) {
    BuildingConfig cfg;
    cfg.num_elevators = 1;
    cfg.capacity = 2;
    cfg.floor_travel_time = 1.0;
    const auto s = simulate(cfg, {call(0, 6, 0), call(1, 6, 2), call(2, 6, 1)});
    EXPECT_DOUBLE_EQ(s[0].waiting_time, 6.0);
    EXPECT_DOUBLE_EQ(s[1].waiting_time, 5.0);  // same door opening
    EXPECT_GT(s[2].waiting_time, 6.0);         // trip full, next trip
}

TEST(Simulator, ServesEveryoneWithNonNegativeWaits) {
    BuildingConfig cfg;
    const auto passengers = generate_traffic(cfg, office_day_profile(3, 1.2), 9);
    const auto served = simulate(cfg, passengers);
    ASSERT_EQ(served.size(), passengers.size());
    for (std::size_t i = 0; i < served.size(); ++i) {
        EXPECT_EQ(served[i].passenger, passengers[i]);
        EXPECT_GE(served[i].waiting_time, 0.0);
        EXPECT_TRUE(std::isfinite(served[i].waiting_time));
    }
}

TEST(Simulator, SecondElevatorDoesNotHurt) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        BuildingConfig one;
        one.num_elevators = 1;
        BuildingConfig two = one;
        two.num_elevators = 2;
        const auto passengers = generate_traffic(one, constant_profile(0.5, 3600.0, 0.4, 0.3), seed);
        EXPECT_LE(mean_wait(simulate(two, passengers)), mean_wait(simulate(one, passengers))) << seed;
    }
}

TEST(Simulator, RejectsBadFloors) {
    EXPECT_THROW(simulate({}, {call(0, 0, 10)}), qelm::ValidationError);
    EXPECT_THROW(simulate({}, {call(0, 3, 3)}), qelm::ValidationError);
}

ServedPassenger served(double t, int from, int to, double wait) { return {call(t, from, to), wait, 0}; }

TEST(Windowize, TierCountsDistanceAndAwt) {
    BuildingConfig cfg;  // 10 floors: low [0,4), high [6,10)
    const auto ds = windowize(cfg,
                              {served(10, 0, 4, 4.0), served(20, 1, 3, 8.0), served(30, 8, 2, 6.0),
                               served(400, 5, 9, 1.0)},
                              300.0, "day", 900.0);
    ASSERT_EQ(ds.windows.size(), 3u);
    const auto& w = ds.windows[0].raw_features;
    EXPECT_EQ(w[0], 2);  // f1
    EXPECT_EQ(w[5], 1);  // f6
    EXPECT_EQ(w[1] + w[2] + w[3] + w[4], 0);
    EXPECT_EQ(w[10], 2);
    EXPECT_EQ(w[11], 1);
    EXPECT_DOUBLE_EQ(w[6], (12.0 + 6.0) / 2);  // mean up distance, m
    EXPECT_DOUBLE_EQ(w[7], 18.0);
    EXPECT_EQ(w[8], 0);  // no preceding window
    EXPECT_EQ(w[9], 0);
    EXPECT_DOUBLE_EQ(ds.windows[0].awt, 6.0);
    EXPECT_FALSE(ds.windows[0].empty);

    const auto& w1 = ds.windows[1].raw_features;
    EXPECT_EQ(w1[1], 1);  // up from medium
    EXPECT_EQ(w1[8], 2);  // previous window up calls
    EXPECT_EQ(w1[9], 1);
    EXPECT_DOUBLE_EQ(ds.windows[1].awt, 1.0);
    EXPECT_TRUE(ds.windows[2].empty);
    EXPECT_EQ(ds.windows[2].awt, 0.0);
}

TEST(Windowize, ConservationAndConsistencyOnSimulatedDay) {
    BuildingConfig cfg;
    const auto passengers = generate_traffic(cfg, office_day_profile(0), 4);
    const auto ds = windowize(cfg, simulate(cfg, passengers));
    EXPECT_EQ(ds.windows.size(), 288u);
    double calls = 0;
    for (std::size_t i = 0; i < ds.windows.size(); ++i) {
        const auto& f = ds.windows[i].raw_features;
        EXPECT_EQ(f[10], f[0] + f[1] + f[2]);
        EXPECT_EQ(f[11], f[3] + f[4] + f[5]);
        if (i) {
            EXPECT_EQ(f[8], ds.windows[i - 1].raw_features[10]);
            EXPECT_EQ(f[9], ds.windows[i - 1].raw_features[11]);
        }
        EXPECT_GE(ds.windows[i].awt, 0.0);
        EXPECT_EQ(ds.windows[i].empty, f[10] + f[11] == 0);
        calls += f[10] + f[11];
    }
    EXPECT_EQ(calls, static_cast<double>(passengers.size()));
}

TEST(Dataset, FeatureSetColumns) {
    EXPECT_EQ(feature_indices(FeatureSet::FS2), (std::vector<int>{10, 11}));
    EXPECT_EQ(feature_indices(FeatureSet::FS3a), (std::vector<int>{10, 11, 6}));
    EXPECT_EQ(feature_indices(FeatureSet::FS3b), (std::vector<int>{10, 11, 0}));
    EXPECT_EQ(feature_indices(FeatureSet::FS4), (std::vector<int>{10, 11, 6, 7}));
    EXPECT_EQ(feature_indices(FeatureSet::FS5), (std::vector<int>{10, 11, 6, 7, 0}));
    EXPECT_EQ(feature_indices(FeatureSet::FS10), (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
    EXPECT_THROW(parse_feature_set("FS7"), qelm::ConfigurationError);
    EXPECT_EQ(parse_feature_set("FS3b"), FeatureSet::FS3b);
}

TEST(Dataset, SelectFeaturesProjectsAndFiltersEmpty) {
    Dataset ds;
    ds.label = "d";
    for (int i = 0; i < 3; ++i) {
        FeatureWindow w;
        w.window_start = 300.0 * i;
        for (int k = 0; k < kNumFeatures; ++k) w.raw_features[static_cast<std::size_t>(k)] = 100 * i + k + 1;
        w.awt = i;
        w.empty = i == 1;
        ds.windows.push_back(w);
    }
    const auto dm = select_features(ds, FeatureSet::FS3b);
    ASSERT_EQ(dm.rows(), 2);
    EXPECT_EQ(dm.features(1, 0), 211);
    EXPECT_EQ(dm.features(1, 2), 201);
    EXPECT_EQ(dm.targets(1), 2);
    EXPECT_EQ(select_features(ds, FeatureSet::FS10, true).rows(), 3);

    const auto both = concatenate({&dm, &dm});
    EXPECT_EQ(both.rows(), 4);
    EXPECT_EQ(both.label, "d+d");
}

TEST(Dataset, CsvRoundTripIsExact) {
    BuildingConfig cfg;
    const auto ds = synthesize_day(cfg, office_day_profile(2), 77, "ExpDay3");
    std::stringstream s;
    write_dataset_csv(s, ds);
    const std::string text = s.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "window_start_s,f1,f2,f3,f4,f5,f6,f7,f8,f9,f10,f11,f12,awt_s,empty");
    const auto back = read_dataset_csv(s, "ExpDay3");
    ASSERT_EQ(back.windows.size(), ds.windows.size());
    for (std::size_t i = 0; i < ds.windows.size(); ++i) {
        EXPECT_EQ(back.windows[i].raw_features, ds.windows[i].raw_features);
        EXPECT_EQ(back.windows[i].awt, ds.windows[i].awt);
        EXPECT_EQ(back.windows[i].empty, ds.windows[i].empty);
    }
    std::stringstream bad("nope\n1,2\n");
    EXPECT_THROW(read_dataset_csv(bad, "x"), qelm::ValidationError);
}

}  // namespace
