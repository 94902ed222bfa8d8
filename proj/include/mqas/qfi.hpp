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

#include <vector>

#include <json.hpp>

#include "mqas/circuit.hpp"

namespace mqas {

struct QfiSummary {
    double trace{0.0};
    /// One entry per rotation gate in circuit order.
    std::vector<double> diagonal;
    std::size_t parameter_count{0};
};

/**
 * Diagonal of the quantum Fisher information over the rotation angles.
 *
 * For a gate exp(-i theta G / 2) with Pauli generator G the entry is
 * 1 - <G>^2, evaluated on the state right after that gate.
 */
[[nodiscard]] QfiSummary qfi_trace(const Circuit &c);

[[nodiscard]] nlohmann::json to_json(const QfiSummary &q);

} // namespace mqas
