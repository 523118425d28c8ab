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

#include "qelm/harness/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qelm/elevator/simulator.hpp"
#include "qelm/error.hpp"
#include "qelm/harness/config.hpp"
#include "qelm/harness/experiment.hpp"
#include "qelm/harness/report.hpp"

namespace qelm::harness {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> threads;
};

ExperimentConfig resolve(const Options& o) {
    auto config = load_config(o.config_path);
    if (o.seed) config.master_seed = *o.seed;
    if (o.out_dir) config.output_dir = *o.out_dir;
    if (o.threads) config.threads = *o.threads;
    config.validate();
    return config;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <class Fn>
std::string render(Fn fn) {
    std::ostringstream s;
    fn(s);
    return s.str();
}

void gen_data(const ExperimentConfig& config, std::ostream& out) {
    const fs::path dir = config.output_dir;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& src : config.datasets) {
        elevator::Dataset ds;
        nlohmann::json entry = {{"label", src.label}};
        if (src.path) {
            ds = elevator::load_dataset_csv(*src.path);
            ds.label = src.label;
            entry["source"] = src.path->string();
        } else {
            const auto profile =
                src.profile ? *src.profile : elevator::office_day_profile(src.profile_variant, src.rate_scale);
            const auto passengers = elevator::generate_traffic(config.building, profile, src.seed);
            ds = elevator::windowize(config.building, elevator::simulate(config.building, passengers),
                                     elevator::kWindowSeconds, src.label);
            write_file(dir / "passengers" / (src.label + ".csv"),
                       render([&](std::ostream& s) { elevator::write_passenger_csv(s, passengers); }));
            entry["source"] = "synthetic";
            entry["seed"] = src.seed;
            entry["profile"] = elevator::to_json(profile);
            entry["passengers"] = passengers.size();
            entry["passenger_file"] = "passengers/" + src.label + ".csv";
        }
        const auto file = "datasets/" + src.label + ".csv";
        write_file(dir / file, render([&](std::ostream& s) { elevator::write_dataset_csv(s, ds); }));
        std::size_t nonempty = 0;
        for (const auto& w : ds.windows) nonempty += w.empty ? 0 : 1;
        entry["file"] = file;
        entry["windows"] = ds.windows.size();
        entry["nonempty_windows"] = nonempty;
        entries.push_back(entry);
        out << "wrote " << (dir / file).string() << " (" << ds.windows.size() << " windows)\n";
    }
    const nlohmann::json manifest = {{"generated_at", utc_timestamp()},
                                     {"master_seed", config.master_seed},
                                     {"building", elevator::to_json(config.building)},
                                     {"datasets", entries}};
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

void emit_ranking(const fs::path& dir, const RankingTable& table, std::ostream& out) {
    write_file(dir / "rq1_ranking.json", to_json(table).dump(2) + "\n");
    const auto text = render([&](std::ostream& s) { write_ranking_text(s, table); });
    write_file(dir / "rq1_ranking.txt", text);
    out << text;
}

void emit_rq2(const fs::path& dir, const std::vector<FeatureSetComparison>& cmp, std::ostream& out) {
    write_file(dir / "rq2_comparison.json", to_json(cmp).dump(2) + "\n");
    const auto text = render([&](std::ostream& s) { write_heatmap_text(s, cmp); });
    write_file(dir / "rq2_heatmap.txt", text);
    out << text;
}

void emit_rq3(const fs::path& dir, const std::vector<BaselineComparison>& cmp,
              const std::vector<BaselineResult>& baselines, std::ostream& out) {
    write_file(dir / "rq3_comparison.json", to_json(cmp, baselines).dump(2) + "\n");
    const auto text = render([&](std::ostream& s) { write_baseline_text(s, cmp, baselines); });
    write_file(dir / "rq3_table.txt", text);
    out << text;
}

void run_rq1(const ExperimentConfig& config, std::ostream& out) {
    if (config.combinations.size() < 2) {
        throw ConfigurationError("config field 'combinations': the ranking needs at least 2");
    }
    const auto result = run_rq1_sweep(materialize_datasets(config), config);
    save_raw_results(config.output_dir / "rq1_raw.csv", result.runs);
    emit_ranking(config.output_dir, result.ranking, out);
}

void run_rq2(const ExperimentConfig& config, std::ostream& out) {
    std::vector<RunResults> runs;
    const auto cmp = run_rq2_comparison(materialize_datasets(config), config, config.study_combination, &runs);
    save_raw_results(config.output_dir / "rq2_raw.csv", runs);
    emit_rq2(config.output_dir, cmp, out);
}

void run_rq3(const ExperimentConfig& config, std::ostream& out) {
    const auto result = run_rq3_baseline(materialize_datasets(config), config, config.study_combination);
    save_raw_results(config.output_dir / "rq3_raw.csv", result.runs);
    write_file(config.output_dir / "rq3_baselines.csv",
               render([&](std::ostream& s) { write_baselines_csv(s, result.baselines); }));
    emit_rq3(config.output_dir, result.comparisons, result.baselines, out);
}

void rank(const ExperimentConfig& config, std::ostream& out) {
    emit_ranking(config.output_dir, rank_combinations(load_raw_results(config.output_dir / "rq1_raw.csv")), out);
}

void report(const ExperimentConfig& config, std::ostream& out) {
    const fs::path dir = config.output_dir;
    bool any = false;
    if (fs::exists(dir / "rq1_raw.csv")) {
        emit_ranking(dir, rank_combinations(load_raw_results(dir / "rq1_raw.csv")), out);
        any = true;
    }
    if (fs::exists(dir / "rq2_raw.csv")) {
        emit_rq2(dir,
                 compare_feature_sets(load_raw_results(dir / "rq2_raw.csv"), config.study_combination,
                                      config.mwu_continuity_correction),
                 out);
        any = true;
    }
    if (fs::exists(dir / "rq3_raw.csv") && fs::exists(dir / "rq3_baselines.csv")) {
        std::ifstream in(dir / "rq3_baselines.csv");
        const auto baselines = read_baselines_csv(in);
        emit_rq3(dir, compare_with_baseline(load_raw_results(dir / "rq3_raw.csv"), baselines, config.study_combination),
                 baselines, out);
        any = true;
    }
    if (!any) throw std::runtime_error("no raw results found in " + dir.string());
}

}  // namespace

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum extreme learning machine experiments on elevator waiting times", "qelm"};
    app.require_subcommand(1);
    Options opts;
    using Action = void (*)(const ExperimentConfig&, std::ostream&);
    const std::vector<std::tuple<const char*, const char*, Action>> commands = {
        {"gen-data", "Simulate the configured days and write dataset CSVs plus a manifest", gen_data},
        {"run-rq1", "Sweep all combinations and feature sets, rank by AMSE", run_rq1},
        {"run-rq2", "Compare feature sets for the study combination", run_rq2},
        {"run-rq3", "Compare the study combination against the regression-tree baseline", run_rq3},
        {"rank", "Rebuild the ranking from rq1_raw.csv", rank},
        {"report", "Rebuild every summary from the raw result files", report},
    };
    std::vector<std::pair<CLI::App*, Action>> subs;
    for (const auto& [name, help, action] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opts.config_path, "Experiment config (JSON)")->required();
        sub->add_option("--seed", opts.seed, "Override master_seed");
        sub->add_option("--out", opts.out_dir, "Override output_dir");
        sub->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
        subs.emplace_back(sub, action);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "qelm: " << e.what() << '\n';
        return 2;
    }
    try {
        const auto config = resolve(opts);
        for (const auto& [sub, action] : subs) {
            if (sub->parsed()) action(config, out);
        }
        return 0;
    } catch (const ConfigurationError& e) {
        err << "qelm: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "qelm: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qelm::harness
