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

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mqas/circuit.hpp"
#include "mqas/problems.hpp"

namespace mqas {

/// Function of the rotation angles to minimize. Must be an expectation value
/// of some observable for the parameter-shift gradient to be exact.
using Objective = std::function<double(const Circuit &)>;

/// <H> on the circuit's output state.
[[nodiscard]] Objective energy_objective(const PauliHamiltonian &h);
/// 1 - fidelity with the target state.
[[nodiscard]] Objective infidelity_objective(const StateVector &target);
/// Objective matching the problem's reward; nullopt for magic-max, whose
/// reward is not an expectation value.
[[nodiscard]] std::optional<Objective> problem_objective(const Problem &p);

/// Parameter-shift gradient, one entry per rotation gate in circuit order:
/// [f(theta_i + pi/2) - f(theta_i - pi/2)] / 2.
[[nodiscard]] std::vector<double> objective_gradient(const Circuit &c, const Objective &f);

struct AdamSettings {
    double lr{0.05};
    std::size_t max_steps{300};
    /// Stop once the objective moved less than tol over the last `window`
    /// steps.
    double tol{1e-6};
    std::size_t window{10};
    double beta1{0.9};
    double beta2{0.999};
    double epsilon{1e-8};
};

struct FinetuneReport {
    double initial_objective{0.0};
    double final_objective{0.0};
    std::size_t steps{0};
    /// Objective at every iterate, starting with the input angles.
    std::vector<double> trace;
    std::vector<double> final_angles;
    AdamSettings settings;
};

/// Adam over the rotation angles with the structure frozen. Returns the best
/// iterate seen, so final_objective <= initial_objective.
[[nodiscard]] std::pair<Circuit, FinetuneReport>
adam_finetune(const Circuit &c, const Objective &f, const AdamSettings &settings = {});

[[nodiscard]] nlohmann::json to_json(const AdamSettings &s);
/// Reads the keys present over a copy of base; unknown keys throw.
[[nodiscard]] AdamSettings adam_settings_from_json(const nlohmann::json &j,
                                                   AdamSettings base = {});
[[nodiscard]] nlohmann::json to_json(const FinetuneReport &r, bool include_trace = true);

} // namespace mqas
