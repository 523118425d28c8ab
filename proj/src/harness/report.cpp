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

#include "qelm/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qelm/error.hpp"

namespace qelm::harness {

namespace {

constexpr const char* kRawHeader = "dataset,feature_set,encoder,reservoir,repetition,mse";
constexpr const char* kBaselineHeader = "dataset,fold,mse,splits";

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool next_row(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

void expect_header(std::istream& in, const char* header, const char* what) {
    std::string line;
    if (!next_row(in, line) || line != header) {
        throw ValidationError(std::string(what) + ": expected header '" + header + "'");
    }
}

double parse_number(const std::string& cell, const char* what, std::size_t row) {
    try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (used == cell.size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string(what) + ": bad number '" + cell + "' at row " + std::to_string(row));
}

nlohmann::json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_raw_results_csv(std::ostream& out, const std::vector<RunResults>& runs) {
    out << kRawHeader << '\n';
    for (const auto& r : runs) {
        const std::string prefix = r.dataset + ',' + elevator::to_string(r.feature_set) + ',' +
                                   model::to_string(r.combination.encoder) + ',' +
                                   model::to_string(r.combination.reservoir) + ',';
        for (std::size_t i = 0; i < r.mse_values.size(); ++i) {
            out << prefix << i << ',' << fmt("%.17g", r.mse_values[i]) << '\n';
        }
    }
}

std::vector<RunResults> read_raw_results_csv(std::istream& in) {
    expect_header(in, kRawHeader, "raw results csv");
    std::vector<RunResults> runs;
    std::map<std::string, int> folds;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> index;
    std::string line;
    std::size_t row = 1;
    while (next_row(in, line)) {
        ++row;
        const auto cells = split_row(line);
        if (cells.size() != 6) throw ValidationError("raw results csv: expected 6 columns at row " + std::to_string(row));
        const auto fold = folds.try_emplace(cells[0], static_cast<int>(folds.size())).first->second;
        const auto combo = Combination::parse(cells[2] + "+" + cells[3]);
        const auto key = std::make_tuple(cells[0], cells[1], combo.name());
        auto it = index.find(key);
        if (it == index.end()) {
            RunResults r;
            r.dataset = cells[0];
            r.fold = fold;
            r.feature_set = elevator::parse_feature_set(cells[1]);
            r.combination = combo;
            it = index.emplace(key, runs.size()).first;
            runs.push_back(std::move(r));
        }
        auto& values = runs[it->second].mse_values;
        const auto rep = static_cast<std::size_t>(parse_number(cells[4], "raw results csv", row));
        if (rep != values.size()) {
            throw ValidationError("raw results csv: repetitions out of order at row " + std::to_string(row));
        }
        values.push_back(parse_number(cells[5], "raw results csv", row));
    }
    return runs;
}

void save_raw_results(const std::filesystem::path& path, const std::vector<RunResults>& runs) {
    std::ostringstream out;
    write_raw_results_csv(out, runs);
    write_file(path, out.str());
}

std::vector<RunResults> load_raw_results(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return read_raw_results_csv(in);
}

void write_baselines_csv(std::ostream& out, const std::vector<BaselineResult>& baselines) {
    out << kBaselineHeader << '\n';
    for (const auto& b : baselines) {
        out << b.dataset << ',' << b.fold << ',' << fmt("%.17g", b.mse) << ',' << b.splits << '\n';
    }
}

std::vector<BaselineResult> read_baselines_csv(std::istream& in) {
    expect_header(in, kBaselineHeader, "baselines csv");
    std::vector<BaselineResult> out;
    std::string line;
    std::size_t row = 1;
    while (next_row(in, line)) {
        ++row;
        const auto cells = split_row(line);
        if (cells.size() != 4) throw ValidationError("baselines csv: expected 4 columns at row " + std::to_string(row));
        out.push_back({cells[0], static_cast<int>(parse_number(cells[1], "baselines csv", row)),
                       parse_number(cells[2], "baselines csv", row),
                       static_cast<int>(parse_number(cells[3], "baselines csv", row))});
    }
    return out;
}

nlohmann::json to_json(const RankingTable& table) {
    nlohmann::json settings = nlohmann::json::array();
    for (const auto& s : table.settings) {
        nlohmann::json ranking = nlohmann::json::array();
        for (std::size_t i = 0; i < s.ranking.size(); ++i) {
            ranking.push_back({{"rank", i + 1}, {"combination", s.ranking[i].combination}, {"amse", s.ranking[i].amse}});
        }
        settings.push_back({{"dataset", s.dataset}, {"feature_set", s.feature_set}, {"ranking", ranking}});
    }
    nlohmann::json podium = nlohmann::json::object();
    for (const auto& [name, counts] : table.podium) {
        podium[name] = {{"first", counts[0]}, {"second", counts[1]}, {"third", counts[2]}};
    }
    return {{"settings", settings}, {"podium", podium}, {"winner", table.winner}};
}

void write_ranking_text(std::ostream& out, const RankingTable& table) {
    out << "AMSE ranking, " << table.settings.size() << " settings\n\n";
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-6s %-14s %-14s %-14s\n", "dataset", "fs", "1st", "2nd", "3rd");
    out << buf;
    for (const auto& s : table.settings) {
        std::string cols[3];
        for (std::size_t i = 0; i < 3 && i < s.ranking.size(); ++i) cols[i] = s.ranking[i].combination;
        std::snprintf(buf, sizeof buf, "%-10s %-6s %-14s %-14s %-14s\n", s.dataset.c_str(), s.feature_set.c_str(),
                      cols[0].c_str(), cols[1].c_str(), cols[2].c_str());
        out << buf;
    }
    out << "\npodium counts\n";
    std::snprintf(buf, sizeof buf, "%-14s %5s %5s %5s\n", "combination", "1st", "2nd", "3rd");
    out << buf;
    for (const auto& [name, c] : table.podium) {
        std::snprintf(buf, sizeof buf, "%-14s %5d %5d %5d\n", name.c_str(), c[0], c[1], c[2]);
        out << buf;
    }
    out << "\nwinner: " << table.winner << '\n';
}

nlohmann::json to_json(const std::vector<FeatureSetComparison>& comparisons) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : comparisons) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& p : c.pairs) {
            pairs.push_back({{"first", p.first},
                             {"second", p.second},
                             {"u", p.u},
                             {"a12", p.a12},
                             {"magnitude", stats::to_string(p.magnitude)},
                             {"p_raw", p.p_raw},
                             {"p_holm", p.p_holm},
                             {"significant", p.significant}});
        }
        out.push_back({{"dataset", c.dataset},
                       {"combination", c.combination},
                       {"feature_sets", c.feature_sets},
                       {"kruskal_wallis",
                        {{"h", c.omnibus.h}, {"p", c.omnibus.p}, {"df", c.omnibus.degrees_of_freedom}}},
                       {"pairwise_run", c.pairwise_run},
                       {"pairs", pairs}});
    }
    return out;
}

void write_heatmap_text(std::ostream& out, const std::vector<FeatureSetComparison>& comparisons) {
    char buf[64];
    for (const auto& c : comparisons) {
        out << c.dataset << " (" << c.combination << ")  Kruskal-Wallis H=" << fmt("%.4f", c.omnibus.h)
            << " p=" << fmt("%.4g", c.omnibus.p) << '\n';
        if (!c.pairwise_run) {
            out << "  no overall difference at alpha " << kAlpha << "; pairwise tests skipped\n\n";
            continue;
        }
        out << "  A12(row, col); '*' = not significant after Holm\n";
        std::snprintf(buf, sizeof buf, "  %-6s", "");
        out << buf;
        for (std::size_t j = 0; j + 1 < c.feature_sets.size(); ++j) {
            std::snprintf(buf, sizeof buf, " %-8s", c.feature_sets[j].c_str());
            out << buf;
        }
        out << '\n';
        std::size_t k = 0;
        std::map<std::pair<std::size_t, std::size_t>, const PairwiseComparison*> cell;
        for (std::size_t i = 0; i < c.feature_sets.size(); ++i) {
            for (std::size_t j = i + 1; j < c.feature_sets.size(); ++j) cell[{j, i}] = &c.pairs[k++];
        }
        for (std::size_t i = 1; i < c.feature_sets.size(); ++i) {
            std::snprintf(buf, sizeof buf, "  %-6s", c.feature_sets[i].c_str());
            out << buf;
            for (std::size_t j = 0; j < i; ++j) {
                // stored as A12(first=j, second=i); the row reads A12(i, j)
                const auto* p = cell[{i, j}];
                std::snprintf(buf, sizeof buf, " %.3f%-3s", 1.0 - p->a12, p->significant ? "" : "*");
                out << buf;
            }
            out << '\n';
        }
        out << '\n';
    }
}

nlohmann::json to_json(const std::vector<BaselineComparison>& comparisons,
                       const std::vector<BaselineResult>& baselines) {
    nlohmann::json base = nlohmann::json::array();
    for (const auto& b : baselines) {
        base.push_back({{"dataset", b.dataset}, {"fold", b.fold}, {"mse", b.mse}, {"splits", b.splits}});
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : comparisons) {
        nlohmann::json w = nullptr;
        if (c.wilcoxon) {
            w = {{"w", c.wilcoxon->w}, {"z", c.wilcoxon->z}, {"p", c.wilcoxon->p}, {"n_used", c.wilcoxon->n_used}};
        }
        rows.push_back({{"dataset", c.dataset},
                        {"feature_set", c.feature_set},
                        {"combination", c.combination},
                        {"baseline_mse", c.baseline_mse},
                        {"amse", c.amse},
                        {"wilcoxon", w},
                        {"cohens_d", optional_number(c.cohens_d)},
                        {"magnitude", c.cohens_d ? nlohmann::json(stats::to_string(c.magnitude)) : nlohmann::json(nullptr)},
                        {"runs_above_baseline", c.runs_above_baseline},
                        {"runs", c.runs}});
    }
    return {{"baselines", base}, {"comparisons", rows}};
}

void write_baseline_text(std::ostream& out, const std::vector<BaselineComparison>& comparisons,
                         const std::vector<BaselineResult>& baselines) {
    char buf[200];
    out << "regression-tree baseline (FS10)\n";
    for (const auto& b : baselines) {
        std::snprintf(buf, sizeof buf, "  %-10s mse=%.4f splits=%d\n", b.dataset.c_str(), b.mse, b.splits);
        out << buf;
    }
    out << '\n';
    std::snprintf(buf, sizeof buf, "%-10s %-6s %12s %12s %10s %8s %-10s %s\n", "dataset", "fs", "baseline", "amse",
                  "p", "d", "magnitude", "above");
    out << buf;
    for (const auto& c : comparisons) {
        const std::string p = c.wilcoxon ? fmt("%.3g", c.wilcoxon->p) : "-";
        const std::string d = c.cohens_d ? fmt("%.3f", *c.cohens_d) : "-";
        const std::string mag = c.cohens_d ? stats::to_string(c.magnitude) : "-";
        std::snprintf(buf, sizeof buf, "%-10s %-6s %12.4f %12.4f %10s %8s %-10s %d/%d\n", c.dataset.c_str(),
                      c.feature_set.c_str(), c.baseline_mse, c.amse, p.c_str(), d.c_str(), mag.c_str(),
                      c.runs_above_baseline, c.runs);
        out << buf;
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qelm::harness
