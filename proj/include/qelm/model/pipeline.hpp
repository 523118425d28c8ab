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

#include <filesystem>
#include <functional>

#include <Eigen/Dense>

#include "json.hpp"
#include "qelm/model/circuit.hpp"
#include "qelm/model/encoder.hpp"
#include "qelm/model/normalization.hpp"
#include "qelm/model/readout.hpp"
#include "qelm/model/reservoir.hpp"

namespace qelm::model {

struct TrainOptions {
    ReadoutOptions readout;
    /// Called with the exact rows normalization is fit on.
    std::function<void(const Eigen::MatrixXd&)> on_normalization_fit;
};

/// Trained QELM: normalization, fixed circuits and the readout. Immutable
/// after construction; safe for concurrent prediction.
class Pipeline {
public:
    Pipeline(NormalizationParams normalization, EncoderSpec encoder, Reservoir reservoir, ReadoutModel readout);

    const NormalizationParams& normalization() const { return normalization_; }
    const EncoderSpec& encoder_spec() const { return encoder_spec_; }
    const EncoderCircuit& encoder() const { return encoder_; }
    const Reservoir& reservoir() const { return reservoir_; }
    const ReadoutModel& readout() const { return readout_; }

    /// Raw (unnormalized) feature vector -> predicted target.
    double predict(const Eigen::VectorXd& raw_features) const;
    Eigen::VectorXd predict_rows(const Eigen::MatrixXd& raw_feature_rows) const;

    /// P x 3M observation matrix for raw feature rows.
    Eigen::MatrixXd observe(const Eigen::MatrixXd& raw_feature_rows) const;

    nlohmann::json to_json() const;
    static Pipeline from_json(const nlohmann::json& doc);

    void save(const std::filesystem::path& path) const;
    static Pipeline load(const std::filesystem::path& path);

private:
    NormalizationParams normalization_;
    EncoderSpec encoder_spec_;
    EncoderCircuit encoder_;
    Reservoir reservoir_;
    ReadoutModel readout_;
};

/// Fit normalization on `features`, run every row through the circuit and
/// fit the readout on the resulting observation matrix.
Pipeline qelm_train(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets, const EncoderSpec& encoder,
                    const ReservoirSpec& reservoir, const TrainOptions& options = {});

nlohmann::json encoder_to_json(const EncoderSpec& spec);
EncoderSpec encoder_from_json(const nlohmann::json& doc);
nlohmann::json reservoir_to_json(const ReservoirSpec& spec);
ReservoirSpec reservoir_from_json(const nlohmann::json& doc);

}  // namespace qelm::model
