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

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "mqas/circuit.hpp"

namespace mqas {

using Rng = std::mt19937_64;

enum class ActionClass : std::uint8_t { Add, Swap, Delete, Change };

[[nodiscard]] std::string_view action_name(ActionClass a) noexcept;

/// Probability mass over the four action classes. Stored unnormalized;
/// sampling normalizes over the classes feasible for a given circuit.
struct ActionDistribution {
    double p_add{0.5};
    double p_swap{0.2};
    double p_change{0.2};
    double p_delete{0.1};

    [[nodiscard]] double weight(ActionClass a) const noexcept;
    [[nodiscard]] ActionDistribution normalized() const;
    friend bool operator==(const ActionDistribution &,
                           const ActionDistribution &) = default;
};

/// A fully realized mutation. Replaying it with apply() on the same input
/// circuit reproduces the child exactly.
struct Action {
    ActionClass cls{ActionClass::Add};
    /// Gate index touched by Swap/Delete/Change; the new index for Add.
    std::size_t position{0};
    /// Gate appended (Add) or written in place (Swap).
    GateOp gate{};
    /// Angle perturbation for Change.
    double epsilon{0.0};

    friend bool operator==(const Action &, const Action &) = default;
};

struct MutationSettings {
    ActionDistribution dist{};
    std::vector<GateKind> gate_set{kSearchGateSet};
    /// Standard deviation of the Change perturbation.
    double delta_theta{0.15};
    std::size_t gate_cap{30};
};

class NoFeasibleAction : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] bool is_feasible(ActionClass a, const Circuit &c,
                               std::size_t gate_cap) noexcept;

/// Samples a gate from gate_set on n qubits: kind uniform, wires uniform,
/// rotation angle uniform in [0, 2pi). CX is skipped when n < 2.
[[nodiscard]] GateOp sample_gate(std::size_t n,
                                 const std::vector<GateKind> &gate_set, Rng &rng);

/// Samples one action class (infeasible classes resampled away) and its
/// payload, returning the mutated copy together with the action.
/// Throws NoFeasibleAction when no class with positive mass is feasible.
[[nodiscard]] std::pair<Circuit, Action>
apply_action(const Circuit &c, const MutationSettings &settings, Rng &rng);

/// Deterministic replay of a realized action.
[[nodiscard]] Circuit apply(const Circuit &c, const Action &a);

/// Unprotected random circuit (prefix_len = 0) with num_gates gates.
/// Throws std::invalid_argument if gate_set contains CX and n < 2.
[[nodiscard]] Circuit random_circuit(std::size_t n, std::size_t num_gates,
                                     const std::vector<GateKind> &gate_set,
                                     Rng &rng);

} // namespace mqas
