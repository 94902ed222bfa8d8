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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "mqas/estimator.hpp"

namespace mqas {

/// Held-out benchmark set: circuits_per_n random circuits per qubit count,
/// gate counts uniform in [min_gates, max_gates].
struct EvaluationProtocol {
    std::vector<std::size_t> qubit_counts{4, 5, 6};
    std::size_t circuits_per_n{50};
    std::size_t min_gates{1};
    std::size_t max_gates{30};
    std::vector<GateKind> gate_set{kDatasetGateSet};
    /// Seeds live in a separate stream from dataset generation (see
    /// protocol_seed), keeping the held-out set disjoint from training.
    std::uint64_t seed{0};
};

/// Derives the evaluation RNG seed; never equal to a raw dataset seed.
[[nodiscard]] std::uint64_t protocol_seed(std::uint64_t seed);

struct EvaluationRow {
    std::size_t n{0};
    std::size_t count{0};
    double rmse{0.0};
    double spearman{0.0};
    bool spearman_degenerate{false};
};

struct EstimatorReport {
    std::string estimator;
    std::size_t count{0};
    double rmse{0.0};
    double spearman{0.0};
    bool spearman_degenerate{false};
    std::vector<EvaluationRow> per_n;
    /// (n, exact, predicted) per circuit, in generation order.
    std::vector<std::size_t> sample_n;
    std::vector<double> exact;
    std::vector<double> predicted;
};

[[nodiscard]] std::vector<Circuit> protocol_circuits(const EvaluationProtocol &p);

[[nodiscard]] EstimatorReport evaluate_estimator(const MagicEstimator &estimator,
                                                 const EvaluationProtocol &protocol);

[[nodiscard]] nlohmann::json to_json(const EstimatorReport &r);
/// Writes report.json plus predictions.csv (n,exact,predicted).
void save_report(const EstimatorReport &r, const std::filesystem::path &dir);

} // namespace mqas
