// Copyright 2026 The mqas Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <filesystem>

#include "TestHelpers.hpp"
#include "mqas/circuit_io.hpp"
#include "mqas/estimator.hpp"
#include "mqas/evaluation.hpp"
#include "mqas/features.hpp"
#include "mqas/surrogate.hpp"

using namespace mqas;
using namespace mqas::test;

TEST_CASE("Features::layout", "[Surrogate]") {
    CHECK(feature_names().size() == feature_length());
    const Circuit c(3, {GateOp::single(GateKind::H, 0), GateOp::cx(0, 1),
                        GateOp::single(GateKind::RZ, 2, 0.5), GateOp::single(GateKind::T, 1)});
    const auto f = features(c);
    REQUIRE(f.size() == feature_length());
    CHECK(f[0] == 3);
    CHECK(f[1] == 4);
    for (double v : f) {
        CHECK(std::isfinite(v));
    }
    CHECK(features(c) == f);
}

TEST_CASE("Surrogate::ridge recovers a linear rule", "[Surrogate]") {
    std::vector<FeatureVector> rows;
    std::vector<double> labels;
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
        FeatureVector f{g(rng), g(rng), g(rng)};
        rows.push_back(f);
        labels.push_back(2.0 * f[0] - 0.5 * f[2] + 1.25);
    }
    const auto m = fit_ridge(rows, labels, 1e-9);
    CHECK(m.weights[0] == Catch::Approx(2.0).margin(1e-6));
    CHECK(m.weights[1] == Catch::Approx(0.0).margin(1e-6));
    CHECK(m.weights[2] == Catch::Approx(-0.5).margin(1e-6));
    CHECK(m.bias == Catch::Approx(1.25).margin(1e-6));

    // A huge penalty shrinks every weight and leaves the (unpenalized) mean.
    const auto flat = fit_ridge(rows, labels, 1e12);
    double avg = 0;
    for (double y : labels) {
        avg += y;
    }
    avg /= labels.size();
    CHECK(linear_response(flat, rows[0]) == Catch::Approx(avg).margin(1e-6));
    CHECK_THROWS_AS(fit_ridge(rows, labels, 0.0), std::invalid_argument);
}

TEST_CASE("Surrogate::dataset labels are exact M2", "[Surrogate]") {
    DatasetSpec spec;
    spec.size = 40;
    spec.max_qubits = 4;
    spec.max_gates = 20;
    spec.seed = 2;
    const auto ds = generate_dataset(spec);
    REQUIRE(ds.items.size() == 40);
    for (const auto &item : ds.items) {
        CHECK(item.circuit.num_qubits() >= 2);
        CHECK(item.circuit.num_qubits() <= 4);
        CHECK(item.m2 == Catch::Approx(brute_force_m2(item.circuit)).margin(1e-9));
    }
    CHECK(generate_dataset(spec).items.front().circuit == ds.items.front().circuit);

    const auto path = std::filesystem::temp_directory_path() / "mqas_test_dataset.jsonl";
    save_dataset(ds, path);
    const auto back = load_dataset(path);
    REQUIRE(back.items.size() == ds.items.size());
    CHECK(back.items[7].circuit == ds.items[7].circuit);
    CHECK(back.items[7].m2 == ds.items[7].m2);
}

TEST_CASE("Surrogate::model predictions", "[Surrogate]") {
    DatasetSpec spec;
    spec.size = 800;
    spec.seed = 5;
    const auto model = train_surrogate(generate_dataset(spec), 1e-3);
    CHECK(model.schema_version == kFeatureSchemaVersion);
    CHECK(model.metadata.dataset_size == 800);

    std::vector<Circuit> cs;
    for (std::uint64_t s = 0; s < 20; ++s) {
        cs.push_back(random_test_circuit(2 + s % 4, 5 + s, s));
    }
    const auto batch = predict_batch(model, cs);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto single = predict(model, cs[i]);
        CHECK(batch[i].value == single.value);
        CHECK(single.value >= 0.0);
        CHECK(single.value <= m2_max(cs[i].num_qubits()));
        CHECK(single.method == MagicMethod::Surrogate);
    }

    const auto path = std::filesystem::temp_directory_path() / "mqas_test_model.json";
    save_surrogate(model, path);
    const auto back = load_surrogate(path);
    CHECK(back.weights == model.weights);
    CHECK(back.bias == model.bias);

    auto wrong = model;
    wrong.schema_version = kFeatureSchemaVersion + 1;
    CHECK_THROWS_AS(predict(wrong, cs[0]), std::invalid_argument);
    CHECK_THROWS_AS(SurrogateEstimator(wrong), std::invalid_argument);
}

TEST_CASE("Evaluation::protocol", "[Surrogate]") {
    EvaluationProtocol p;
    p.seed = 4;
    const auto cs = protocol_circuits(p);
    REQUIRE(cs.size() == 150);
    for (const auto &c : cs) {
        CHECK(c.size() >= 1);
        CHECK(c.size() <= 30);
    }
    CHECK(protocol_circuits(p).back() == cs.back());
    CHECK(protocol_seed(4) != 4);

    // The exact estimator scores perfectly on its own protocol.
    const auto report = evaluate_estimator(ExactEstimator{}, p);
    CHECK(report.count == 150);
    CHECK(report.rmse == Catch::Approx(0.0).margin(1e-12));
    CHECK(report.spearman == Catch::Approx(1.0));
    CHECK(report.per_n.size() == 3);

    const auto dir = std::filesystem::temp_directory_path() / "mqas_test_eval";
    save_report(report, dir);
    const auto csv = read_text_file(dir / "predictions.csv");
    CHECK(csv.rfind("n,exact,predicted\n", 0) == 0);
}
