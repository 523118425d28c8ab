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

#include "qelm/harness/config.hpp"

#include <fstream>
#include <set>

#include "qelm/error.hpp"

namespace qelm::harness {

using nlohmann::json;

std::string Combination::name() const { return model::to_string(encoder) + "+" + model::to_string(reservoir); }

Combination Combination::parse(const std::string& text) {
    const auto plus = text.find('+');
    if (plus == std::string::npos) throw ConfigurationError("combination '" + text + "' must look like ENCODER+RESERVOIR");
    return {model::parse_encoder_kind(text.substr(0, plus)), model::parse_reservoir_kind(text.substr(plus + 1))};
}

const std::vector<Combination>& all_combinations() {
    static const std::vector<Combination> combos = [] {
        std::vector<Combination> out;
        for (auto e : {model::EncoderKind::DHE, model::EncoderKind::RHE}) {
            for (auto r : {model::ReservoirKind::CNOT, model::ReservoirKind::HAAR, model::ReservoirKind::ISING,
                           model::ReservoirKind::ROTATION}) {
                out.push_back({e, r});
            }
        }
        return out;
    }();
    return combos;
}

int ExperimentConfig::repetitions_for(elevator::FeatureSet fs) const {
    const auto it = repetition_overrides.find(fs);
    return it == repetition_overrides.end() ? repetitions : it->second;
}

void ExperimentConfig::validate() const {
    if (datasets.empty()) throw ConfigurationError("config field 'datasets': at least one dataset required");
    std::set<std::string> labels;
    for (const auto& d : datasets) {
        if (d.label.empty()) throw ConfigurationError("config field 'datasets': every dataset needs a label");
        if (!labels.insert(d.label).second) {
            throw ConfigurationError("config field 'datasets': duplicate label '" + d.label + "'");
        }
        if (!(d.rate_scale > 0.0)) throw ConfigurationError("config field 'datasets.rate_scale' must be > 0");
    }
    if (feature_sets.empty()) throw ConfigurationError("config field 'feature_sets': at least one feature set required");
    if (combinations.empty()) {
        throw ConfigurationError("config field 'combinations': at least one combination required");
    }
    if (repetitions < 1) throw ConfigurationError("config field 'repetitions' must be >= 1");
    for (const auto& [fs, reps] : repetition_overrides) {
        if (reps < 1) throw ConfigurationError("config field 'repetition_overrides." + elevator::to_string(fs) + "' must be >= 1");
    }
    if (encoder_depth < 1) throw ConfigurationError("config field 'encoder_depth' must be >= 1");
    if (reservoir_depth < 1) throw ConfigurationError("config field 'reservoir_depth' must be >= 1");
    if (!(ising_time_step > 0.0)) throw ConfigurationError("config field 'ising_time_step' must be > 0");
    if (!(ridge_lambda >= 0.0)) throw ConfigurationError("config field 'ridge_lambda' must be >= 0");
    if (baseline_max_splits < 0) throw ConfigurationError("config field 'baseline_max_splits' must be >= 0");
    if (threads < 0) throw ConfigurationError("config field 'threads' must be >= 0");
    building.validate();
}

std::vector<DatasetSource> default_dataset_sources() {
    std::vector<DatasetSource> out;
    for (int day = 0; day < 4; ++day) {
        DatasetSource s;
        s.label = "ExpDay" + std::to_string(day + 1);
        s.seed = 1000 + static_cast<std::uint64_t>(day);
        s.profile_variant = day;
        out.push_back(s);
    }
    return out;
}

namespace {

template <class T>
T field(const json& doc, const char* name, T fallback) {
    if (!doc.contains(name)) return fallback;
    try {
        return doc.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ConfigurationError(std::string("config field '") + name + "': " + e.what());
    }
}

}  // namespace

ExperimentConfig config_from_json(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ConfigurationError("config: top level must be an object");
    static const std::set<std::string> known = {
        "datasets", "building", "feature_sets", "combinations", "repetitions", "repetition_overrides",
        "encoder_depth", "reservoir_depth", "ising_time_step", "ridge_lambda", "include_intercept",
        "include_empty_windows", "master_seed", "output_dir", "study_combination", "baseline_max_splits",
        "mwu_continuity_correction", "threads"};
    for (const auto& [key, value] : doc.items()) {
        if (!known.contains(key)) throw ConfigurationError("config field '" + key + "' is not recognized");
    }
    ExperimentConfig c;
    try {
        if (doc.contains("building")) c.building = elevator::building_from_json(doc.at("building"));
    } catch (const json::exception& e) {
        throw ConfigurationError(std::string("config field 'building': ") + e.what());
    }

    if (doc.contains("datasets")) {
        const json& ds = doc.at("datasets");
        if (!ds.is_array()) throw ConfigurationError("config field 'datasets' must be an array");
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const json& d = ds[i];
            const std::string where = "config field 'datasets[" + std::to_string(i) + "]'";
            DatasetSource s;
            try {
                if (d.is_string()) {
                    s.path = d.get<std::string>();
                } else {
                    if (d.contains("path")) s.path = d.at("path").get<std::string>();
                    s.label = d.value("label", std::string{});
                    s.seed = d.value("seed", std::uint64_t{1000 + i});
                    s.profile_variant = d.value("variant", static_cast<int>(i % 4));
                    s.rate_scale = d.value("rate_scale", 1.0);
                    if (d.contains("profile")) s.profile = elevator::profile_from_json(d.at("profile"));
                }
            } catch (const json::exception& e) {
                throw ConfigurationError(where + ": " + e.what());
            } catch (const ValidationError& e) {
                throw ConfigurationError(where + ": " + e.what());
            }
            if (s.path && s.path->is_relative() && !base_dir.empty()) s.path = base_dir / *s.path;
            if (s.label.empty()) {
                if (!s.path) throw ConfigurationError(where + ": synthetic datasets need a 'label'");
                s.label = s.path->stem().string();
            }
            c.datasets.push_back(std::move(s));
        }
    } else {
        c.datasets = default_dataset_sources();
    }

    const auto fs_names = field<std::vector<std::string>>(doc, "feature_sets", {"FS2", "FS3a", "FS3b", "FS4", "FS5", "FS10"});
    for (const auto& n : fs_names) {
        try {
            c.feature_sets.push_back(elevator::parse_feature_set(n));
        } catch (const ConfigurationError& e) {
            throw ConfigurationError(std::string("config field 'feature_sets': ") + e.what());
        }
    }

    if (doc.contains("combinations") && doc.at("combinations").is_string() &&
        doc.at("combinations").get<std::string>() == "all") {
        c.combinations = all_combinations();
    } else if (doc.contains("combinations")) {
        for (const auto& n : field<std::vector<std::string>>(doc, "combinations", {})) {
            try {
                c.combinations.push_back(Combination::parse(n));
            } catch (const ConfigurationError& e) {
                throw ConfigurationError(std::string("config field 'combinations': ") + e.what());
            }
        }
    } else {
        c.combinations = all_combinations();
    }

    c.repetitions = field(doc, "repetitions", c.repetitions);
    for (const auto& [k, v] : field<std::map<std::string, int>>(doc, "repetition_overrides", {})) {
        try {
            c.repetition_overrides[elevator::parse_feature_set(k)] = v;
        } catch (const ConfigurationError& e) {
            throw ConfigurationError(std::string("config field 'repetition_overrides': ") + e.what());
        }
    }
    c.encoder_depth = field(doc, "encoder_depth", c.encoder_depth);
    c.reservoir_depth = field(doc, "reservoir_depth", c.reservoir_depth);
    c.ising_time_step = field(doc, "ising_time_step", c.ising_time_step);
    c.ridge_lambda = field(doc, "ridge_lambda", c.ridge_lambda);
    c.include_intercept = field(doc, "include_intercept", c.include_intercept);
    c.include_empty_windows = field(doc, "include_empty_windows", c.include_empty_windows);
    c.master_seed = field(doc, "master_seed", c.master_seed);
    c.output_dir = field<std::string>(doc, "output_dir", c.output_dir.string());
    if (c.output_dir.is_relative() && !base_dir.empty()) c.output_dir = base_dir / c.output_dir;
    try {
        c.study_combination = Combination::parse(field<std::string>(doc, "study_combination", "DHE+ISING"));
    } catch (const ConfigurationError& e) {
        throw ConfigurationError(std::string("config field 'study_combination': ") + e.what());
    }
    c.baseline_max_splits = field(doc, "baseline_max_splits", c.baseline_max_splits);
    c.mwu_continuity_correction = field(doc, "mwu_continuity_correction", c.mwu_continuity_correction);
    c.threads = field(doc, "threads", c.threads);
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("config: cannot open '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigurationError("config: " + path.string() + " is not valid JSON: " + e.what());
    }
    return config_from_json(doc, path.parent_path());
}

json to_json(const ExperimentConfig& c) {
    json datasets = json::array();
    for (const auto& d : c.datasets) {
        json j = {{"label", d.label}};
        if (d.path) {
            j["path"] = d.path->string();
        } else {
            j["seed"] = d.seed;
            j["variant"] = d.profile_variant;
            j["rate_scale"] = d.rate_scale;
            if (d.profile) j["profile"] = elevator::to_json(*d.profile);
        }
        datasets.push_back(std::move(j));
    }
    json fs = json::array();
    for (auto f : c.feature_sets) fs.push_back(elevator::to_string(f));
    json combos = json::array();
    for (const auto& k : c.combinations) combos.push_back(k.name());
    json overrides = json::object();
    for (const auto& [f, r] : c.repetition_overrides) overrides[elevator::to_string(f)] = r;
    return {{"datasets", std::move(datasets)},
            {"building", elevator::to_json(c.building)},
            {"feature_sets", std::move(fs)},
            {"combinations", std::move(combos)},
            {"repetitions", c.repetitions},
            {"repetition_overrides", std::move(overrides)},
            {"encoder_depth", c.encoder_depth},
            {"reservoir_depth", c.reservoir_depth},
            {"ising_time_step", c.ising_time_step},
            {"ridge_lambda", c.ridge_lambda},
            {"include_intercept", c.include_intercept},
            {"include_empty_windows", c.include_empty_windows},
            {"master_seed", c.master_seed},
            {"output_dir", c.output_dir.string()},
            {"study_combination", c.study_combination.name()},
            {"baseline_max_splits", c.baseline_max_splits},
            {"mwu_continuity_correction", c.mwu_continuity_correction},
            {"threads", c.threads}};
}

std::vector<elevator::Dataset> materialize_datasets(const ExperimentConfig& config) {
    std::vector<elevator::Dataset> out;
    for (const auto& src : config.datasets) {
        if (src.path) {
            auto ds = elevator::load_dataset_csv(*src.path);
            ds.label = src.label;
            out.push_back(std::move(ds));
        } else {
            const auto profile = src.profile ? *src.profile
                                             : elevator::office_day_profile(src.profile_variant, src.rate_scale);
            out.push_back(elevator::synthesize_day(config.building, profile, src.seed, src.label));
        }
    }
    return out;
}

}  // namespace qelm::harness
