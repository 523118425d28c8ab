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

#include "qelm/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qelm/error.hpp"
#include "qelm/harness/seeds.hpp"
#include "qelm/model/pipeline.hpp"
#include "qelm/stats/metrics.hpp"
#include "qelm/stats/regression_tree.hpp"

namespace qelm::harness {

using elevator::DesignMatrix;
using elevator::FeatureSet;

namespace {

struct Fold {
    DesignMatrix train;
    DesignMatrix test;
};

std::vector<Fold> make_folds(const std::vector<elevator::Dataset>& datasets, FeatureSet fs, bool include_empty) {
    if (datasets.size() < 2) {
        throw ConfigurationError("cross-validation needs at least 2 datasets, got " + std::to_string(datasets.size()));
    }
    std::vector<DesignMatrix> parts;
    for (const auto& d : datasets) parts.push_back(elevator::select_features(d, fs, include_empty));
    std::vector<Fold> folds;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<const DesignMatrix*> others;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != k) others.push_back(&parts[j]);
        }
        Fold f{elevator::concatenate(others), parts[k]};
        if (f.train.rows() == 0) throw ValidationError("fold " + std::to_string(k) + ": no training windows");
        if (f.test.rows() == 0) throw ValidationError("fold " + std::to_string(k) + ": no test windows");
        folds.push_back(std::move(f));
    }
    return folds;
}

double run_cell(const Fold& fold, int fold_index, const ExperimentConfig& config, const Combination& combo,
                FeatureSet fs, int repetition, const ExperimentProbe* probe) {
    const std::uint64_t seed =
        derive_seed(config.master_seed, fold_index, combo.name(), elevator::to_string(fs), repetition);
    const int m = static_cast<int>(fold.train.features.cols());
    const model::EncoderSpec encoder =
        combo.encoder == model::EncoderKind::DHE
            ? model::EncoderSpec::dhe(m, config.encoder_depth)
            : model::EncoderSpec::rhe(m, config.encoder_depth, derive_stream(seed, "encoder"));
    const bool layered =
        combo.reservoir == model::ReservoirKind::CNOT || combo.reservoir == model::ReservoirKind::ROTATION;
    const model::ReservoirSpec reservoir =
        model::ReservoirSpec::sample(combo.reservoir, m, layered ? config.reservoir_depth : 0,
                                     derive_stream(seed, "reservoir"), config.ising_time_step);
    model::TrainOptions options;
    options.readout = {config.ridge_lambda, config.include_intercept};
    if (probe && probe->on_fit) {
        options.on_normalization_fit = [&](const Eigen::MatrixXd& rows) { probe->on_fit("normalization", fold_index, rows); };
    }
    const auto pipeline = model::qelm_train(fold.train.features, fold.train.targets, encoder, reservoir, options);
    const Eigen::VectorXd predictions = pipeline.predict_rows(fold.test.features);
    return stats::mse({predictions.data(), static_cast<std::size_t>(predictions.size())},
                      {fold.test.targets.data(), static_cast<std::size_t>(fold.test.targets.size())});
}

/// Runs fn(i) for i in [0, n) on `threads` workers; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn fn) {
    unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n);
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<RunResults> run_sweep(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                                  const std::vector<Combination>& combinations,
                                  const std::vector<FeatureSet>& feature_sets, const ExperimentProbe* probe) {
    struct Cell {
        std::size_t result;
        std::size_t fs_index;
        int fold;
        int repetition;
    };
    std::vector<std::vector<Fold>> folds;
    for (auto fs : feature_sets) folds.push_back(make_folds(datasets, fs, config.include_empty_windows));

    std::vector<RunResults> results;
    std::vector<Cell> cells;
    for (const auto& combo : combinations) {
        for (std::size_t f = 0; f < feature_sets.size(); ++f) {
            const int reps = config.repetitions_for(feature_sets[f]);
            for (std::size_t k = 0; k < datasets.size(); ++k) {
                RunResults r;
                r.dataset = datasets[k].label;
                r.fold = static_cast<int>(k);
                r.feature_set = feature_sets[f];
                r.combination = combo;
                r.mse_values.assign(static_cast<std::size_t>(reps), 0.0);
                for (int rep = 0; rep < reps; ++rep) cells.push_back({results.size(), f, static_cast<int>(k), rep});
                results.push_back(std::move(r));
            }
        }
    }
    parallel_for(cells.size(), config.threads, [&](std::size_t i) {
        const Cell& c = cells[i];
        RunResults& r = results[c.result];
        r.mse_values[static_cast<std::size_t>(c.repetition)] =
            run_cell(folds[c.fs_index][static_cast<std::size_t>(c.fold)], c.fold, config, r.combination,
                     r.feature_set, c.repetition, probe);
    });
    return results;
}

std::vector<RunResults> cross_validate(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                                       const Combination& combination, FeatureSet feature_set,
                                       const ExperimentProbe* probe) {
    return run_sweep(datasets, config, {combination}, {feature_set}, probe);
}

RankingTable rank_combinations(const std::vector<RunResults>& runs) {
    RankingTable table;
    std::vector<std::pair<std::string, std::string>> order;
    std::map<std::pair<std::string, std::string>, std::vector<RankedEntry>> groups;
    for (const auto& r : runs) {
        const auto key = std::make_pair(r.dataset, elevator::to_string(r.feature_set));
        if (!groups.contains(key)) order.push_back(key);
        groups[key].push_back({r.combination.name(), stats::amse(r.mse_values)});
        table.podium.try_emplace(r.combination.name(), std::array<int, 3>{0, 0, 0});
    }
    for (const auto& key : order) {
        auto entries = groups[key];
        std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
            if (a.amse != b.amse) return a.amse < b.amse;
            return a.combination < b.combination;
        });
        for (std::size_t place = 0; place < std::min<std::size_t>(3, entries.size()); ++place) {
            ++table.podium[entries[place].combination][place];
        }
        table.settings.push_back({key.first, key.second, std::move(entries)});
    }
    int best = -1;
    for (const auto& [name, counts] : table.podium) {
        if (counts[0] > best) {  // map iterates by name, so ties keep the first name
            best = counts[0];
            table.winner = name;
        }
    }
    return table;
}

Rq1Result run_rq1_sweep(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                        const ExperimentProbe* probe) {
    Rq1Result out;
    out.runs = run_sweep(datasets, config, config.combinations, config.feature_sets, probe);
    out.ranking = rank_combinations(out.runs);
    return out;
}

std::vector<FeatureSetComparison> compare_feature_sets(const std::vector<RunResults>& runs,
                                                       const Combination& combination, bool continuity_correction) {
    std::vector<std::string> datasets;
    std::map<std::string, std::vector<const RunResults*>> by_dataset;
    for (const auto& r : runs) {
        if (!(r.combination == combination)) continue;
        if (!by_dataset.contains(r.dataset)) datasets.push_back(r.dataset);
        by_dataset[r.dataset].push_back(&r);
    }
    std::vector<FeatureSetComparison> out;
    for (const auto& ds : datasets) {
        const auto& group = by_dataset[ds];
        if (group.size() < 2) {
            throw ConfigurationError("feature-set comparison needs at least 2 feature sets for " + ds);
        }
        FeatureSetComparison cmp;
        cmp.dataset = ds;
        cmp.combination = combination.name();
        std::vector<std::vector<double>> samples;
        for (const auto* r : group) {
            cmp.feature_sets.push_back(elevator::to_string(r->feature_set));
            samples.push_back(r->mse_values);
        }
        cmp.omnibus = stats::kruskal_wallis(samples);
        if (cmp.omnibus.p < kAlpha) {
            cmp.pairwise_run = true;
            std::vector<double> raw;
            for (std::size_t i = 0; i < group.size(); ++i) {
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    PairwiseComparison pc;
                    pc.first = cmp.feature_sets[i];
                    pc.second = cmp.feature_sets[j];
                    const auto mw = stats::mann_whitney_u(samples[i], samples[j], {continuity_correction});
                    pc.u = mw.u;
                    pc.p_raw = mw.p;
                    pc.a12 = stats::vargha_delaney_a12(samples[i], samples[j]);
                    pc.magnitude = stats::a12_magnitude(pc.a12);
                    raw.push_back(pc.p_raw);
                    cmp.pairs.push_back(pc);
                }
            }
            const auto corrected = stats::holm_bonferroni(raw);
            for (std::size_t k = 0; k < cmp.pairs.size(); ++k) {
                cmp.pairs[k].p_holm = corrected[k];
                cmp.pairs[k].significant = corrected[k] < kAlpha;
            }
        }
        out.push_back(std::move(cmp));
    }
    return out;
}

std::vector<FeatureSetComparison> run_rq2_comparison(const std::vector<elevator::Dataset>& datasets,
                                                     const ExperimentConfig& config, const Combination& combination,
                                                     std::vector<RunResults>* runs_out,
                                                     const ExperimentProbe* probe) {
    if (config.feature_sets.size() < 2) {
        throw ConfigurationError("config field 'feature_sets': the feature-set comparison needs at least 2");
    }
    auto runs = run_sweep(datasets, config, {combination}, config.feature_sets, probe);
    auto out = compare_feature_sets(runs, combination, config.mwu_continuity_correction);
    if (runs_out) *runs_out = std::move(runs);
    return out;
}

std::vector<BaselineResult> baseline_per_fold(const std::vector<elevator::Dataset>& datasets,
                                              const ExperimentConfig& config, const ExperimentProbe* probe) {
    const auto folds = make_folds(datasets, FeatureSet::FS10, config.include_empty_windows);
    std::vector<BaselineResult> out;
    stats::TreeOptions options;
    options.max_splits = config.baseline_max_splits;
    for (std::size_t k = 0; k < folds.size(); ++k) {
        const auto& f = folds[k];
        if (probe && probe->on_fit) probe->on_fit("baseline", static_cast<int>(k), f.train.features);
        const auto tree = stats::fit_regression_tree(f.train.features, f.train.targets, options);
        const Eigen::VectorXd pred = tree.predict_rows(f.test.features);
        out.push_back({datasets[k].label, static_cast<int>(k),
                       stats::mse({pred.data(), static_cast<std::size_t>(pred.size())},
                                  {f.test.targets.data(), static_cast<std::size_t>(f.test.targets.size())}),
                       tree.num_splits()});
    }
    return out;
}

std::vector<BaselineComparison> compare_with_baseline(const std::vector<RunResults>& runs,
                                                      const std::vector<BaselineResult>& baselines,
                                                      const Combination& combination) {
    std::vector<BaselineComparison> out;
    for (const auto& r : runs) {
        if (!(r.combination == combination)) continue;
        const auto it = std::find_if(baselines.begin(), baselines.end(),
                                     [&](const BaselineResult& b) { return b.dataset == r.dataset; });
        if (it == baselines.end()) throw ValidationError("no baseline for dataset " + r.dataset);
        BaselineComparison c;
        c.dataset = r.dataset;
        c.feature_set = elevator::to_string(r.feature_set);
        c.combination = combination.name();
        c.baseline_mse = it->mse;
        c.amse = stats::amse(r.mse_values);
        c.runs = static_cast<int>(r.mse_values.size());
        for (double v : r.mse_values) c.runs_above_baseline += v > it->mse ? 1 : 0;
        try {
            c.wilcoxon = stats::wilcoxon_one_sample(r.mse_values, it->mse);
        } catch (const DegenerateInputError&) {
        }
        try {
            c.cohens_d = stats::cohens_d_one_sample(r.mse_values, it->mse);
            c.magnitude = stats::cohens_d_magnitude(*c.cohens_d);
        } catch (const DegenerateInputError&) {
        } catch (const ValidationError&) {
        }
        out.push_back(std::move(c));
    }
    return out;
}

Rq3Result run_rq3_baseline(const std::vector<elevator::Dataset>& datasets, const ExperimentConfig& config,
                           const Combination& combination, const ExperimentProbe* probe) {
    Rq3Result out;
    out.baselines = baseline_per_fold(datasets, config, probe);
    out.runs = run_sweep(datasets, config, {combination}, config.feature_sets, probe);
    out.comparisons = compare_with_baseline(out.runs, out.baselines, combination);
    return out;
}

}  // namespace qelm::harness
