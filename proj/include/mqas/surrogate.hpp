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
#include <span>
#include <vector>

#include <json.hpp>

#include "mqas/actions.hpp"
#include "mqas/features.hpp"
#include "mqas/magic.hpp"

namespace mqas {

/// Random-circuit dataset recipe: qubits and gate counts uniform over the
/// inclusive ranges, gates uniform over gate_set.
struct DatasetSpec {
    std::size_t min_qubits{2};
    std::size_t max_qubits{6};
    std::size_t min_gates{1};
    std::size_t max_gates{99};
    std::vector<GateKind> gate_set{kDatasetGateSet};
    std::size_t size{6000};
    std::uint64_t seed{0};
};

struct LabeledCircuit {
    Circuit circuit;
    /// Exact M2 of the circuit's output state.
    double m2{0.0};
};

struct LabeledDataset {
    DatasetSpec spec;
    std::vector<LabeledCircuit> items;
};

[[nodiscard]] LabeledDataset generate_dataset(const DatasetSpec &spec);

/// JSON lines, one {"circuit": ..., "m2": ...} object per line.
void save_dataset(const LabeledDataset &ds, const std::filesystem::path &path);
[[nodiscard]] LabeledDataset load_dataset(const std::filesystem::path &path);

struct SurrogateMetadata {
    std::size_t dataset_size{0};
    std::size_t min_qubits{0};
    std::size_t max_qubits{0};
    std::size_t min_gates{0};
    std::size_t max_gates{0};
};

/// Linear model over features(c), clamped to [0, m2_max(n)] on output.
struct SurrogateModel {
    int schema_version{kFeatureSchemaVersion};
    std::vector<double> weights;
    double bias{0.0};
    double lambda{1e-3};
    SurrogateMetadata metadata;
};

class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Closed-form ridge regression of the labels on the features. The bias is
/// not penalized, so a huge lambda leaves the label mean. Features are
/// standardized internally and the returned weights are in raw units.
[[nodiscard]] SurrogateModel train_surrogate(const LabeledDataset &ds, double lambda);

/// Same, from an explicit design matrix (one row per sample).
[[nodiscard]] SurrogateModel fit_ridge(const std::vector<FeatureVector> &rows,
                                       std::span<const double> labels, double lambda);

/// Raw linear response w . f + b, no clamping.
[[nodiscard]] double linear_response(const SurrogateModel &m, const FeatureVector &f);

/// Throws std::invalid_argument if the model's schema does not match.
[[nodiscard]] MagicEstimate predict(const SurrogateModel &m, const Circuit &c);
[[nodiscard]] std::vector<MagicEstimate> predict_batch(const SurrogateModel &m,
                                                       std::span<const Circuit> circuits);

[[nodiscard]] nlohmann::json to_json(const SurrogateModel &m);
[[nodiscard]] SurrogateModel surrogate_from_json(const nlohmann::json &j);
void save_surrogate(const SurrogateModel &m, const std::filesystem::path &path);
[[nodiscard]] SurrogateModel load_surrogate(const std::filesystem::path &path);

} // namespace mqas
