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

#include "qelm/elevator/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qelm/error.hpp"

namespace qelm::elevator {

namespace {

constexpr const char* kDatasetHeader = "window_start_s,f1,f2,f3,f4,f5,f6,f7,f8,f9,f10,f11,f12,awt_s,empty";

}  // namespace

void Dataset::validate() const {
    for (std::size_t i = 0; i < windows.size(); ++i) {
        const auto& w = windows[i];
        if (!(w.duration > 0.0)) throw ValidationError("dataset " + label + ": non-positive window duration");
        if (i > 0 && windows[i - 1].window_start + windows[i - 1].duration > w.window_start + 1e-9) {
            throw ValidationError("dataset " + label + ": windows overlap or are out of order at row " +
                                  std::to_string(i));
        }
    }
}

Dataset windowize(const BuildingConfig& config, const std::vector<ServedPassenger>& served, double window_seconds,
                  std::string label, double day_seconds) {
    config.validate();
    if (!(window_seconds > 0.0)) throw ConfigurationError("windowize: window_seconds must be > 0");
    const auto count = static_cast<std::size_t>(std::ceil(day_seconds / window_seconds));
    const TierPartition tiers = tier_partition(config.num_floors);

    struct Acc {
        std::array<double, 6> tier_calls{};
        double up_distance = 0.0, down_distance = 0.0;
        double up = 0.0, down = 0.0;
        double wait_sum = 0.0;
        std::size_t calls = 0;
    };
    std::vector<Acc> acc(count);
    for (const auto& s : served) {
        const double t = s.passenger.arrival_time;
        if (t < 0.0 || t >= day_seconds) {
            throw ValidationError("windowize: arrival time outside the day");
        }
        auto& a = acc[static_cast<std::size_t>(t / window_seconds)];
        const bool up = s.passenger.destination_floor > s.passenger.origin_floor;
        const int tier = static_cast<int>(tiers.tier_of(s.passenger.origin_floor));
        const double distance =
            std::abs(s.passenger.destination_floor - s.passenger.origin_floor) * config.floor_height;
        a.tier_calls[(up ? 0 : 3) + tier] += 1.0;
        if (up) {
            a.up += 1.0;
            a.up_distance += distance;
        } else {
            a.down += 1.0;
            a.down_distance += distance;
        }
        a.wait_sum += s.waiting_time;
        ++a.calls;
    }

    Dataset ds;
    ds.label = std::move(label);
    ds.windows.resize(count);
    for (std::size_t w = 0; w < count; ++w) {
        const Acc& a = acc[w];
        FeatureWindow& fw = ds.windows[w];
        fw.window_start = static_cast<double>(w) * window_seconds;
        fw.duration = window_seconds;
        for (int k = 0; k < 6; ++k) fw.raw_features[k] = a.tier_calls[k];
        fw.raw_features[6] = a.up > 0 ? a.up_distance / a.up : 0.0;
        fw.raw_features[7] = a.down > 0 ? a.down_distance / a.down : 0.0;
        fw.raw_features[8] = w > 0 ? acc[w - 1].up : 0.0;
        fw.raw_features[9] = w > 0 ? acc[w - 1].down : 0.0;
        fw.raw_features[10] = a.up;
        fw.raw_features[11] = a.down;
        fw.empty = a.calls == 0;
        fw.awt = fw.empty ? 0.0 : a.wait_sum / static_cast<double>(a.calls);
    }
    return ds;
}

std::string to_string(FeatureSet fs) {
    switch (fs) {
        case FeatureSet::FS2: return "FS2";
        case FeatureSet::FS3a: return "FS3a";
        case FeatureSet::FS3b: return "FS3b";
        case FeatureSet::FS4: return "FS4";
        case FeatureSet::FS5: return "FS5";
        case FeatureSet::FS10: return "FS10";
    }
    return "?";
}

FeatureSet parse_feature_set(const std::string& text) {
    for (auto fs : all_feature_sets()) {
        if (to_string(fs) == text) return fs;
    }
    throw ConfigurationError("unknown feature set '" + text + "'");
}

const std::vector<FeatureSet>& all_feature_sets() {
    static const std::vector<FeatureSet> sets = {FeatureSet::FS2, FeatureSet::FS3a, FeatureSet::FS3b,
                                                 FeatureSet::FS4, FeatureSet::FS5,  FeatureSet::FS10};
    return sets;
}

std::vector<int> feature_indices(FeatureSet fs) {
    switch (fs) {
        case FeatureSet::FS2: return {10, 11};
        case FeatureSet::FS3a: return {10, 11, 6};
        case FeatureSet::FS3b: return {10, 11, 0};
        case FeatureSet::FS4: return {10, 11, 6, 7};
        case FeatureSet::FS5: return {10, 11, 6, 7, 0};
        case FeatureSet::FS10: return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    }
    throw ConfigurationError("unknown feature set");
}

DesignMatrix select_features(const Dataset& dataset, FeatureSet fs, bool include_empty) {
    DesignMatrix dm;
    dm.label = dataset.label;
    dm.columns = feature_indices(fs);
    std::vector<const FeatureWindow*> rows;
    for (const auto& w : dataset.windows) {
        if (include_empty || !w.empty) rows.push_back(&w);
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    dm.features.resize(n, static_cast<Eigen::Index>(dm.columns.size()));
    dm.targets.resize(n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < dm.columns.size(); ++c) {
            dm.features(r, static_cast<Eigen::Index>(c)) = rows[r]->raw_features[dm.columns[c]];
        }
        dm.targets(r) = rows[r]->awt;
        dm.window_start.push_back(rows[r]->window_start);
    }
    return dm;
}

DesignMatrix concatenate(const std::vector<const DesignMatrix*>& parts) {
    if (parts.empty()) throw ValidationError("concatenate: no parts");
    DesignMatrix out;
    out.columns = parts.front()->columns;
    Eigen::Index total = 0;
    for (const auto* p : parts) {
        if (p->columns != out.columns) throw ShapeError("concatenate: column sets differ");
        total += p->rows();
    }
    out.features.resize(total, static_cast<Eigen::Index>(out.columns.size()));
    out.targets.resize(total);
    Eigen::Index at = 0;
    for (const auto* p : parts) {
        out.label += (out.label.empty() ? "" : "+") + p->label;
        out.features.middleRows(at, p->rows()) = p->features;
        out.targets.segment(at, p->rows()) = p->targets;
        out.window_start.insert(out.window_start.end(), p->window_start.begin(), p->window_start.end());
        at += p->rows();
    }
    return out;
}

Dataset synthesize_day(const BuildingConfig& config, const TrafficProfile& profile, std::uint64_t seed,
                       std::string label) {
    const auto passengers = generate_traffic(config, profile, seed);
    return windowize(config, simulate(config, passengers), kWindowSeconds, std::move(label));
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
    out << kDatasetHeader << '\n';
    char buf[64];
    for (const auto& w : dataset.windows) {
        std::snprintf(buf, sizeof buf, "%.17g", w.window_start);
        out << buf;
        for (double f : w.raw_features) {
            std::snprintf(buf, sizeof buf, ",%.17g", f);
            out << buf;
        }
        std::snprintf(buf, sizeof buf, ",%.17g,%d\n", w.awt, w.empty ? 1 : 0);
        out << buf;
    }
}

Dataset read_dataset_csv(std::istream& in, std::string label) {
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("dataset csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kDatasetHeader) throw ValidationError("dataset csv: unexpected header '" + line + "'");
    Dataset ds;
    ds.label = std::move(label);
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        std::vector<double> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t used = 0;
                cells.push_back(std::stod(cell, &used));
            } catch (const std::exception&) {
                throw ValidationError("dataset csv: bad number at row " + std::to_string(row));
            }
        }
        if (cells.size() != 15) throw ValidationError("dataset csv: expected 15 columns at row " + std::to_string(row));
        FeatureWindow w;
        w.window_start = cells[0];
        for (int k = 0; k < kNumFeatures; ++k) w.raw_features[k] = cells[1 + k];
        w.awt = cells[13];
        w.empty = cells[14] != 0.0;
        ds.windows.push_back(w);
    }
    for (std::size_t i = 1; i < ds.windows.size(); ++i) {
        ds.windows[i - 1].duration = ds.windows[i].window_start - ds.windows[i - 1].window_start;
    }
    if (ds.windows.size() >= 2) ds.windows.back().duration = ds.windows[ds.windows.size() - 2].duration;
    ds.validate();
    return ds;
}

void save_dataset_csv(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_dataset_csv(out, dataset);
}

Dataset load_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot read dataset " + path.string());
    return read_dataset_csv(in, path.stem().string());
}

}  // namespace qelm::elevator
