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
#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "qelm/error.hpp"
#include "qelm/model/circuit.hpp"
#include "qelm/model/encoder.hpp"
#include "qelm/model/normalization.hpp"
#include "qelm/model/pipeline.hpp"
#include "qelm/model/readout.hpp"
#include "qelm/model/reservoir.hpp"

namespace {

using namespace qelm::model;
using qelm::quantum::GateKind;
using qelm::quantum::GateOp;
using qelm::quantum::PauliAxis;

Reservoir identity_reservoir(int n) {
    ReservoirSpec spec;
    spec.kind = ReservoirKind::ISING;
    spec.num_qubits = n;
    spec.ising = qelm::quantum::IsingParams{n, Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n), 1.0};
    return build_reservoir(spec);
}

TEST(Normalization, FitsPerColumnExtrema) {
    Eigen::MatrixXd x(3, 2);
    x << 0, 5, 10, 5, 4, 5;
    const auto p = fit_normalization(x);
    EXPECT_EQ(p.min, (std::vector<double>{0, 5}));
    EXPECT_EQ(p.max, (std::vector<double>{10, 5}));
    EXPECT_THROW(fit_normalization(Eigen::MatrixXd(0, 2)), qelm::ValidationError);
}

TEST(Normalization, MapsOntoZeroPi) {
    NormalizationParams p{{0, 5}, {10, 5}};
    const auto a = apply_normalization(p, Eigen::Vector2d(0, 5));
    EXPECT_DOUBLE_EQ(a(0), 0.0);
    EXPECT_DOUBLE_EQ(a(1), 0.0);  // degenerate feature
    EXPECT_DOUBLE_EQ(apply_normalization(p, Eigen::Vector2d(5, 1))(0), M_PI / 2);
    EXPECT_DOUBLE_EQ(apply_normalization(p, Eigen::Vector2d(10, 1))(0), M_PI);
    EXPECT_DOUBLE_EQ(apply_normalization(p, Eigen::Vector2d(42, 1))(0), M_PI);
    EXPECT_DOUBLE_EQ(apply_normalization(p, Eigen::Vector2d(-3, 1))(0), 0.0);
    EXPECT_THROW(apply_normalization(p, Eigen::Vector3d(1, 2, 3)), qelm::ShapeError);
}

TEST(Encoder, DheLayerStructure) {
    const auto c = build_encoder(EncoderSpec::dhe(3));
    ASSERT_EQ(c.layers.size(), 1u);
    const auto gates = c.bind(Eigen::Vector3d(0.1, 0.2, 0.3));
    const std::vector<GateOp> expected = {GateOp::rx(0, 0.1), GateOp::rx(1, 0.2), GateOp::rx(2, 0.3),
                                          GateOp::cz(0, 1),   GateOp::cz(1, 2),   GateOp::cz(2, 0)};
    EXPECT_EQ(gates, expected);
}

TEST(Encoder, RheDrawsAxesPerSeed) {
    const auto a = EncoderSpec::rhe(5, 2, 9), b = EncoderSpec::rhe(5, 2, 9);
    EXPECT_EQ(a.axis_assignment, b.axis_assignment);
    bool differs = false;
    for (std::uint64_t s = 0; s < 20 && !differs; ++s) differs = EncoderSpec::rhe(5, 2, s).axis_assignment != a.axis_assignment;
    EXPECT_TRUE(differs);
    const auto gates = build_encoder(a).bind(Eigen::VectorXd::Constant(5, 0.4));
    ASSERT_EQ(gates.size(), 2u * (5 + 5));
    for (int q = 0; q < 5; ++q) EXPECT_EQ(gates[static_cast<std::size_t>(q)].kind, qelm::quantum::rotation_kind(a.axis_assignment[0][static_cast<std::size_t>(q)]));
}

TEST(Encoder, DheIsSeedIndependentAndReusesAngles) {
    auto s = EncoderSpec::dhe(2, 2);
    const auto gates = build_encoder(s).bind(Eigen::Vector2d(0.5, 0.7));
    s.seed = 1234;
    EXPECT_EQ(build_encoder(s).bind(Eigen::Vector2d(0.5, 0.7)), gates);
    // two layers, each RX RX CZ (a single CZ at M=2)
    ASSERT_EQ(gates.size(), 6u);
    EXPECT_EQ(gates[3], gates[0]);
    EXPECT_EQ(gates[4], gates[1]);
    EXPECT_EQ(gates[2].kind, GateKind::CZ);
}

TEST(Encoder, RejectsSingleFeature) {
    EXPECT_THROW(EncoderSpec::dhe(1).validate(), qelm::ConfigurationError);
    EXPECT_THROW(build_encoder(EncoderSpec::dhe(1)), qelm::ConfigurationError);
}

TEST(Reservoir, CnotRing) {
    const auto r = build_reservoir(ReservoirSpec::sample(ReservoirKind::CNOT, 3, 1, 0));
    const std::vector<GateOp> expected = {GateOp::cnot(0, 1), GateOp::cnot(1, 2), GateOp::cnot(2, 0)};
    EXPECT_EQ(r.gates(), expected);
    EXPECT_EQ(build_reservoir(ReservoirSpec::sample(ReservoirKind::CNOT, 3, 10, 0)).gates().size(), 30u);
}

TEST(Reservoir, RotationLayers) {
    const auto spec = ReservoirSpec::sample(ReservoirKind::ROTATION, 3, 2, 17);
    ASSERT_TRUE(spec.rotation_layers);
    const auto r = build_reservoir(spec);
    ASSERT_EQ(r.gates().size(), 12u);
    for (int layer = 0; layer < 2; ++layer) {
        for (int q = 0; q < 3; ++q) {
            const auto& rg = (*spec.rotation_layers)[static_cast<std::size_t>(layer)][static_cast<std::size_t>(q)];
            EXPECT_GE(rg.angle, 0.0);
            EXPECT_LT(rg.angle, 2 * M_PI);
            EXPECT_EQ(r.gates()[static_cast<std::size_t>(6 * layer + q)], GateOp::rotation(rg.axis, q, rg.angle));
        }
        EXPECT_EQ(r.gates()[static_cast<std::size_t>(6 * layer + 3)], GateOp::cnot(0, 1));
    }
    EXPECT_EQ(ReservoirSpec::sample(ReservoirKind::ROTATION, 3, 2, 17).rotation_layers, spec.rotation_layers);
}

TEST(Reservoir, DenseKindsAndValidation) {
    const auto haar = build_reservoir(ReservoirSpec::sample(ReservoirKind::HAAR, 3, 0, 4));
    EXPECT_TRUE(haar.is_dense());
    EXPECT_LT(haar.unitary().unitarity_error(), 1e-10);
    const auto ising = build_reservoir(ReservoirSpec::sample(ReservoirKind::ISING, 3, 0, 4));
    EXPECT_TRUE(ising.is_dense());
    auto deep = ReservoirSpec::sample(ReservoirKind::HAAR, 3, 0, 4);
    EXPECT_EQ(ReservoirSpec::sample(ReservoirKind::HAAR, 3, 5, 4).depth, 0);
    deep.depth = 5;
    EXPECT_THROW(deep.validate(), qelm::ConfigurationError);
    auto bad = ReservoirSpec::sample(ReservoirKind::CNOT, 3, 1, 0);
    bad.ising = qelm::quantum::sample_ising_params(3, 1);
    EXPECT_THROW(build_reservoir(bad), qelm::ConfigurationError);
}

TEST(Circuit, IdentityReservoirClosedForms) {
    const auto enc = EncoderSpec::dhe(2);
    const auto r = identity_reservoir(2);
    const auto v0 = run_circuit(enc, r, Eigen::Vector2d(0, 0));
    const Eigen::VectorXd expected0 = (Eigen::VectorXd(6) << 0, 0, 1, 0, 0, 1).finished();
    EXPECT_LT((v0 - expected0).cwiseAbs().maxCoeff(), 1e-12);
    const auto v1 = run_circuit(enc, r, Eigen::Vector2d(M_PI, 0));
    EXPECT_NEAR(v1(observation_index(0, PauliAxis::Z)), -1.0, 1e-12);
    EXPECT_NEAR(v1(observation_index(1, PauliAxis::Z)), 1.0, 1e-12);
}

TEST(Circuit, ObservationsBoundedForAllReservoirs) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0, M_PI);
    for (int m : {2, 3, 5}) {
        for (auto kind : {ReservoirKind::CNOT, ReservoirKind::HAAR, ReservoirKind::ISING, ReservoirKind::ROTATION}) {
            const bool layered = kind == ReservoirKind::CNOT || kind == ReservoirKind::ROTATION;
            const auto r = build_reservoir(ReservoirSpec::sample(kind, m, layered ? 10 : 0, 99));
            const auto enc = build_encoder(EncoderSpec::rhe(m, 1, 7));
            Eigen::MatrixXd angles(1000, m);
            for (Eigen::Index i = 0; i < angles.size(); ++i) angles(i) = angle(rng);
            const auto obs = observe_batch(enc, r, angles);
            EXPECT_LE(obs.cwiseAbs().maxCoeff(), 1.0);
            // batch path agrees with the per-state path
            const Eigen::VectorXd a0 = angles.row(17).transpose();
            EXPECT_LT((obs.row(17).transpose() - run_circuit(enc, r, a0)).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Circuit, IdentityIsingMatchesEncoderOnly) {
    const auto enc = build_encoder(EncoderSpec::dhe(3));
    const Eigen::Vector3d angles(0.3, 1.1, 2.9);
    auto s = qelm::quantum::new_state(3);
    for (const auto& g : enc.bind(angles)) s.apply(g);
    const auto v = run_circuit(enc, identity_reservoir(3), angles);
    for (int q = 0; q < 3; ++q) {
        for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            EXPECT_NEAR(v(observation_index(q, axis)), s.expectation(q, axis), 1e-12);
        }
    }
}

TEST(Circuit, Deterministic) {
    const auto spec = ReservoirSpec::sample(ReservoirKind::ISING, 3, 0, 55);
    const Eigen::Vector3d angles(0.1, 0.2, 0.3);
    const auto a = run_circuit(EncoderSpec::dhe(3), build_reservoir(spec), angles);
    const auto b = run_circuit(EncoderSpec::dhe(3), build_reservoir(ReservoirSpec::sample(ReservoirKind::ISING, 3, 0, 55)), angles);
    EXPECT_TRUE(a == b);
    EXPECT_THROW(run_circuit(EncoderSpec::dhe(2), build_reservoir(spec), Eigen::Vector2d(0, 0)), qelm::ShapeError);
}

TEST(Readout, SolvesSmallSystemsExactly) {
    const auto m = fit_readout(Eigen::Matrix2d::Identity(), Eigen::Vector2d(3, 5));
    EXPECT_NEAR(m.weights(0), 3.0, 1e-12);
    EXPECT_NEAR(m.weights(1), 5.0, 1e-12);
    EXPECT_NEAR(residual_sum_of_squares(m, Eigen::Matrix2d::Identity(), Eigen::Vector2d(3, 5)), 0.0, 1e-20);

    std::mt19937_64 rng(4);
    std::normal_distribution<double> n;
    Eigen::MatrixXd v(40, 6);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n(rng);
    Eigen::VectorXd w(6);
    w << 1, -2, 0.5, 3, 0, -1;
    const auto fit = fit_readout(v, v * w);
    EXPECT_LT((fit.weights - w).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT(residual_sum_of_squares(fit, v, v * w), 1e-12);
}

TEST(Readout, MatchesNormalEquationOracle) {
    std::mt19937_64 rng(12);
    std::normal_distribution<double> n;
    Eigen::MatrixXd v(50, 6);
    Eigen::VectorXd t(50);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n(rng);
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = 10 * n(rng);
    const auto fit = fit_readout(v, t);
    EXPECT_LT((fit.weights - qelm::testing::normal_equation_solution(v, t)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Readout, RidgeAndInterceptOracles) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> n;
    Eigen::MatrixXd v(30, 4);
    Eigen::VectorXd t(30);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n(rng);
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = 5 + n(rng);
    const double lambda = 0.7;
    const Eigen::MatrixXd gram = v.transpose() * v + lambda * Eigen::MatrixXd::Identity(4, 4);
    const Eigen::VectorXd ridge = gram.inverse() * v.transpose() * t;
    EXPECT_LT((fit_readout(v, t, {lambda, false}).weights - ridge).cwiseAbs().maxCoeff(), 1e-8);

    Eigen::MatrixXd aug(30, 5);
    aug << v, Eigen::VectorXd::Ones(30);
    const Eigen::VectorXd full = qelm::testing::normal_equation_solution(aug, t);
    const auto with_b = fit_readout(v, t, {0.0, true});
    EXPECT_LT((with_b.weights - full.head(4)).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_NEAR(with_b.intercept, full(4), 1e-8);
    EXPECT_NEAR(with_b.predict(Eigen::VectorXd(v.row(0).transpose())), aug.row(0).dot(full), 1e-8);
}

TEST(Readout, RankDeficientGivesMinimumNorm) {
    Eigen::MatrixXd v(4, 2);
    v << 1, 1, 2, 2, 3, 3, 4, 4;
    const auto fit = fit_readout(v, Eigen::Vector4d(2, 4, 6, 8));
    EXPECT_NEAR(fit.weights(0), 1.0, 1e-10);
    EXPECT_NEAR(fit.weights(1), 1.0, 1e-10);
}

TEST(Readout, RssIsLocalMinimum) {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> n;
    Eigen::MatrixXd v(60, 9);
    Eigen::VectorXd t(60);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n(rng);
    for (Eigen::Index i = 0; i < t.size(); ++i) t(i) = n(rng);
    const auto fit = fit_readout(v, t);
    const double rss = residual_sum_of_squares(fit, v, t);
    for (int k = 0; k < 100; ++k) {
        auto moved = fit;
        for (Eigen::Index j = 0; j < 9; ++j) moved.weights(j) += 1e-3 * n(rng);
        EXPECT_LE(rss, residual_sum_of_squares(moved, v, t) + 1e-9);
    }
}

TEST(Readout, PredictAndErrors) {
    ReadoutModel m;
    m.weights = Eigen::Vector3d(1, 0, 0);
    EXPECT_DOUBLE_EQ(predict(m, Eigen::Vector3d(0.5, -1, 1)), 0.5);
    m.weights = Eigen::Vector2d(2, 3);
    EXPECT_DOUBLE_EQ(predict(m, Eigen::Vector2d(1, 1)), 5.0);
    m.weights.setZero();
    EXPECT_DOUBLE_EQ(predict(m, Eigen::Vector2d(1, 1)), 0.0);
    EXPECT_THROW(predict(m, Eigen::Vector3d(1, 1, 1)), qelm::ShapeError);
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(2, 2);
    v(0, 0) = std::nan("");
    EXPECT_THROW(fit_readout(v, Eigen::Vector2d(1, 1)), qelm::ValidationError);
}

struct Toy {
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
};

Toy toy_data(int p, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 20);
    Toy t{Eigen::MatrixXd(p, m), Eigen::VectorXd(p)};
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < m; ++j) t.x(i, j) = std::floor(u(rng));
        t.y(i) = 3 + 0.5 * t.x(i, 0) + std::sin(t.x(i, 1));
    }
    return t;
}

TEST(Pipeline, SelfPredictionMatchesReadoutResidual) {
    const auto d = toy_data(80, 3, 1);
    const auto pipe = qelm_train(d.x, d.y, EncoderSpec::dhe(3), ReservoirSpec::sample(ReservoirKind::ISING, 3, 0, 8));
    const Eigen::VectorXd pred = pipe.predict_rows(d.x);
    const double rss = residual_sum_of_squares(pipe.readout(), pipe.observe(d.x), d.y);
    EXPECT_NEAR((pred - d.y).squaredNorm(), rss, 1e-9 * std::max(1.0, rss));
    EXPECT_NEAR(pipe.predict(Eigen::VectorXd(d.x.row(5).transpose())), pred(5), 1e-12);
    EXPECT_TRUE(std::isfinite(pipe.predict(Eigen::Vector3d(1e9, -1e9, 0))));
}

TEST(Pipeline, TrainingIsDeterministic) {
    const auto d = toy_data(50, 4, 2);
    const auto spec = ReservoirSpec::sample(ReservoirKind::ROTATION, 4, 10, 3);
    const auto a = qelm_train(d.x, d.y, EncoderSpec::rhe(4, 1, 6), spec);
    const auto b = qelm_train(d.x, d.y, EncoderSpec::rhe(4, 1, 6), spec);
    EXPECT_TRUE(a.readout().weights == b.readout().weights);
}

TEST(Pipeline, NormalizationSeesTrainingRowsOnly) {
    const auto d = toy_data(30, 2, 3);
    TrainOptions opts;
    Eigen::MatrixXd seen;
    opts.on_normalization_fit = [&](const Eigen::MatrixXd& rows) { seen = rows; };
    const auto pipe = qelm_train(d.x, d.y, EncoderSpec::dhe(2), ReservoirSpec::sample(ReservoirKind::CNOT, 2, 10, 0), opts);
    EXPECT_TRUE(seen == d.x);
    EXPECT_EQ(pipe.normalization().min[0], d.x.col(0).minCoeff());
}

TEST(Pipeline, JsonRoundTripIsBitIdentical) {
    const auto d = toy_data(60, 3, 4);
    const auto dir = std::filesystem::temp_directory_path() / "qelm_model_test";
    std::filesystem::create_directories(dir);
    for (auto kind : {ReservoirKind::CNOT, ReservoirKind::HAAR, ReservoirKind::ISING, ReservoirKind::ROTATION}) {
        const bool layered = kind == ReservoirKind::CNOT || kind == ReservoirKind::ROTATION;
        const auto pipe = qelm_train(d.x, d.y, EncoderSpec::rhe(3, 2, 5),
                                     ReservoirSpec::sample(kind, 3, layered ? 4 : 0, 12), {{0.01, true}, {}});
        const auto path = dir / (to_string(kind) + ".json");
        pipe.save(path);
        const auto loaded = Pipeline::load(path);
        EXPECT_TRUE(loaded.predict_rows(d.x) == pipe.predict_rows(d.x)) << to_string(kind);
        EXPECT_EQ(loaded.readout().include_intercept, true);
    }
    std::filesystem::remove_all(dir);
}

TEST(Pipeline, RejectsMismatchedSpecs) {
    const auto d = toy_data(20, 3, 5);
    EXPECT_THROW(qelm_train(d.x, d.y, EncoderSpec::dhe(2), ReservoirSpec::sample(ReservoirKind::CNOT, 2, 1, 0)),
                 qelm::ShapeError);
    EXPECT_THROW(qelm_train(d.x, d.y, EncoderSpec::dhe(3), ReservoirSpec::sample(ReservoirKind::CNOT, 2, 1, 0)),
                 qelm::ShapeError);
    EXPECT_THROW(Pipeline::from_json({{"format", "other"}}), qelm::ConfigurationError);
}

}  // namespace
