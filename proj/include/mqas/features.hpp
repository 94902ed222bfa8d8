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

#include <string_view>
#include <vector>

#include "mqas/circuit.hpp"

namespace mqas {

/// Bumped whenever the layout of FeatureVector changes; models record it.
inline constexpr int kFeatureSchemaVersion = 1;

/// Fixed-length circuit descriptor fed to the surrogate magic model.
using FeatureVector = std::vector<double>;

/// Column names of features(), in order.
[[nodiscard]] const std::vector<std::string_view> &feature_names();

[[nodiscard]] std::size_t feature_length();

/**
 * Deterministic descriptor of a circuit. Contains the qubit count, total and
 * per-kind gate counts, parameterized and two-qubit counts, DAG depth, the
 * angle sums sum(sin^2(2 theta)) and sum(|sin theta|) over rotations, the T
 * count and the mean gates per qubit, followed by a few saturating
 * transforms of those counts (magic of a state is bounded, so the raw counts
 * alone are a poor linear basis).
 */
[[nodiscard]] FeatureVector features(const Circuit &c);

} // namespace mqas
