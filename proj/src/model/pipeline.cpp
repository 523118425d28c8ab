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

#include "qelm/model/pipeline.hpp"

#include <fstream>

#include "qelm/error.hpp"

namespace qelm::model {

using nlohmann::json;
using quantum::PauliAxis;

namespace {

constexpr const char* kFormat = "qelm-pipeline/1";

json matrix_rows(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_rows(const json& rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index cols = n ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
    Eigen::MatrixXd m(n, cols);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows.at(r).size()) != cols) throw ShapeError("ragged matrix in document");
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rows.at(r).at(c).get<double>();
    }
    return m;
}

json vector_json(const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

Eigen::VectorXd vector_from_json(const json& doc) {
    const auto values = doc.get<std::vector<double>>();
    return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

json encoder_to_json(const EncoderSpec& spec) {
    json axes = json::array();
    for (const auto& layer : spec.axis_assignment) {
        json row = json::array();
        for (auto a : layer) row.push_back(quantum::to_string(a));
        axes.push_back(std::move(row));
    }
    return {{"kind", to_string(spec.kind)},
            {"num_features", spec.num_features},
            {"depth", spec.depth},
            {"seed", spec.seed},
            {"axis_assignment", std::move(axes)}};
}

EncoderSpec encoder_from_json(const json& doc) {
    EncoderSpec spec;
    spec.kind = parse_encoder_kind(doc.at("kind").get<std::string>());
    spec.num_features = doc.at("num_features").get<int>();
    spec.depth = doc.at("depth").get<int>();
    spec.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& layer : doc.at("axis_assignment")) {
        std::vector<PauliAxis> axes;
        for (const auto& a : layer) axes.push_back(quantum::parse_axis(a.get<std::string>()));
        spec.axis_assignment.push_back(std::move(axes));
    }
    spec.validate();
    return spec;
}

json reservoir_to_json(const ReservoirSpec& spec) {
    json doc = {{"kind", to_string(spec.kind)},
                {"num_qubits", spec.num_qubits},
                {"depth", spec.depth},
                {"seed", spec.seed}};
    if (spec.ising) {
        doc["ising"] = {{"couplings", matrix_rows(spec.ising->couplings)},
                        {"fields", vector_json(spec.ising->fields)},
                        {"time_step", spec.ising->time_step}};
    }
    if (spec.rotation_layers) {
        json layers = json::array();
        for (const auto& layer : *spec.rotation_layers) {
            json row = json::array();
            for (const auto& g : layer) row.push_back({{"axis", quantum::to_string(g.axis)}, {"angle", g.angle}});
            layers.push_back(std::move(row));
        }
        doc["rotation_layers"] = std::move(layers);
    }
    return doc;
}

ReservoirSpec reservoir_from_json(const json& doc) {
    ReservoirSpec spec;
    spec.kind = parse_reservoir_kind(doc.at("kind").get<std::string>());
    spec.num_qubits = doc.at("num_qubits").get<int>();
    spec.depth = doc.at("depth").get<int>();
    spec.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("ising")) {
        const auto& is = doc.at("ising");
        quantum::IsingParams p;
        p.num_qubits = spec.num_qubits;
        p.couplings = matrix_from_rows(is.at("couplings"));
        p.fields = vector_from_json(is.at("fields"));
        p.time_step = is.at("time_step").get<double>();
        spec.ising = std::move(p);
    }
    if (doc.contains("rotation_layers")) {
        std::vector<std::vector<RotationGate>> layers;
        for (const auto& row : doc.at("rotation_layers")) {
            std::vector<RotationGate> layer;
            for (const auto& g : row) {
                layer.push_back({quantum::parse_axis(g.at("axis").get<std::string>()), g.at("angle").get<double>()});
            }
            layers.push_back(std::move(layer));
        }
        spec.rotation_layers = std::move(layers);
    }
    spec.validate();
    return spec;
}

Pipeline::Pipeline(NormalizationParams normalization, EncoderSpec encoder, Reservoir reservoir, ReadoutModel readout)
    : normalization_(std::move(normalization)),
      encoder_spec_(std::move(encoder)),
      encoder_(build_encoder(encoder_spec_)),
      reservoir_(std::move(reservoir)),
      readout_(std::move(readout)) {
    if (normalization_.num_features() != static_cast<std::size_t>(encoder_spec_.num_features)) {
        throw ShapeError("pipeline: normalization and encoder feature counts differ");
    }
    if (reservoir_.num_qubits() != encoder_.num_qubits) {
        throw ShapeError("pipeline: encoder and reservoir qubit counts differ");
    }
    if (readout_.weights.size() != 3 * encoder_.num_qubits) {
        throw ShapeError("pipeline: readout weight count must be 3M");
    }
}

Eigen::MatrixXd Pipeline::observe(const Eigen::MatrixXd& raw_feature_rows) const {
    return observe_batch(encoder_, reservoir_, apply_normalization_rows(normalization_, raw_feature_rows));
}

double Pipeline::predict(const Eigen::VectorXd& raw_features) const {
    const Eigen::MatrixXd row = raw_features.transpose();
    return predict_rows(row)(0);
}

Eigen::VectorXd Pipeline::predict_rows(const Eigen::MatrixXd& raw_feature_rows) const {
    return readout_.predict_rows(observe(raw_feature_rows));
}

json Pipeline::to_json() const {
    json reservoir = reservoir_to_json(reservoir_.spec());
    if (reservoir_.spec().kind == ReservoirKind::HAAR) {
        const auto& u = reservoir_.unitary().matrix();
        reservoir["unitary"] = {{"re", matrix_rows(u.real())}, {"im", matrix_rows(u.imag())}};
    }
    return {{"format", kFormat},
            {"encoder", encoder_to_json(encoder_spec_)},
            {"reservoir", std::move(reservoir)},
            {"normalization", {{"min", normalization_.min}, {"max", normalization_.max}}},
            {"readout",
             {{"weights", vector_json(readout_.weights)},
              {"include_intercept", readout_.include_intercept},
              {"intercept", readout_.intercept},
              {"ridge_lambda", readout_.ridge_lambda}}}};
}

Pipeline Pipeline::from_json(const json& doc) {
    if (doc.value("format", std::string{}) != kFormat) {
        throw ConfigurationError("pipeline document: unsupported format");
    }
    EncoderSpec encoder = encoder_from_json(doc.at("encoder"));
    const json& rdoc = doc.at("reservoir");
    ReservoirSpec rspec = reservoir_from_json(rdoc);
    Reservoir reservoir = [&] {
        if (rspec.kind == ReservoirKind::HAAR && rdoc.contains("unitary")) {
            Eigen::MatrixXcd u(matrix_from_rows(rdoc.at("unitary").at("re")).cast<quantum::Complex>());
            u.imag() = matrix_from_rows(rdoc.at("unitary").at("im"));
            return Reservoir::from_unitary(rspec, quantum::DenseUnitary(std::move(u)));
        }
        return build_reservoir(rspec);
    }();
    NormalizationParams norm;
    norm.min = doc.at("normalization").at("min").get<std::vector<double>>();
    norm.max = doc.at("normalization").at("max").get<std::vector<double>>();
    const json& ro = doc.at("readout");
    ReadoutModel readout;
    readout.weights = vector_from_json(ro.at("weights"));
    readout.include_intercept = ro.at("include_intercept").get<bool>();
    readout.intercept = ro.at("intercept").get<double>();
    readout.ridge_lambda = ro.at("ridge_lambda").get<double>();
    return Pipeline(std::move(norm), std::move(encoder), std::move(reservoir), std::move(readout));
}

void Pipeline::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_json().dump(2) << '\n';
}

Pipeline Pipeline::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return from_json(json::parse(in));
}

Pipeline qelm_train(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets, const EncoderSpec& encoder,
                    const ReservoirSpec& reservoir, const TrainOptions& options) {
    if (features.rows() == 0) throw ValidationError("qelm_train: empty training set");
    if (features.cols() != encoder.num_features) {
        throw ShapeError("qelm_train: dataset has " + std::to_string(features.cols()) + " features, encoder expects " +
                         std::to_string(encoder.num_features));
    }
    if (options.on_normalization_fit) options.on_normalization_fit(features);
    NormalizationParams norm = fit_normalization(features);
    const EncoderCircuit circuit = build_encoder(encoder);
    Reservoir res = build_reservoir(reservoir);
    const Eigen::MatrixXd obs = observe_batch(circuit, res, apply_normalization_rows(norm, features));
    ReadoutModel readout = fit_readout(obs, targets, options.readout);
    return Pipeline(std::move(norm), encoder, std::move(res), std::move(readout));
}

}  // namespace qelm::model
