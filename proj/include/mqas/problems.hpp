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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mqas/circuit.hpp"
#include "mqas/pauli.hpp"
#include "mqas/search.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

enum class ProblemKind : std::uint8_t { StateApprox, GroundState, MagicMax };

/**
 * How an energy is mapped onto [0, 1].
 *
 * ScfFci: clamp((e_scf - E) / (e_scf - e_fci), 0, 1). Every state above
 * the SCF energy scores 0.
 * Spectral: clamp((E_hi - E) / (E_hi - e_fci), 0, 1) with E_hi the
 * coefficient-norm upper bound of <H>, so the reward is graded over the
 * whole reachable range.
 */
enum class EnergyRewardMode : std::uint8_t { Spectral, ScfFci };

[[nodiscard]] std::string_view problem_kind_name(ProblemKind k) noexcept;
[[nodiscard]] std::string_view energy_mode_name(EnergyRewardMode m) noexcept;
[[nodiscard]] std::optional<EnergyRewardMode> parse_energy_mode(std::string_view s);

struct Problem {
    ProblemKind kind{ProblemKind::MagicMax};
    std::string id;
    std::size_t n{1};
    std::optional<Circuit> target;
    std::optional<PauliHamiltonian> hamiltonian;
    EnergyRewardMode energy_mode{EnergyRewardMode::Spectral};
};

[[nodiscard]] Problem state_approx_problem(std::string id, Circuit target);
/// Throws std::invalid_argument when h carries no reference energies.
[[nodiscard]] Problem ground_state_problem(std::string id, PauliHamiltonian h,
                                           EnergyRewardMode mode = EnergyRewardMode::Spectral);
[[nodiscard]] Problem magic_max_problem(std::size_t n);

/// |<simulate(c)|simulate(target)>|^2.
[[nodiscard]] double fidelity_reward(const Circuit &c, const Circuit &target);
[[nodiscard]] double fidelity_reward(const Circuit &c, const StateVector &target);

[[nodiscard]] double energy_to_reward(double energy, const PauliHamiltonian &h,
                                      EnergyRewardMode mode = EnergyRewardMode::Spectral);
[[nodiscard]] double energy_reward(const Circuit &c, const PauliHamiltonian &h,
                                   EnergyRewardMode mode = EnergyRewardMode::Spectral);
[[nodiscard]] double energy(const Circuit &c, const PauliHamiltonian &h);

/// m2_exact / m2_max(n).
[[nodiscard]] double magic_reward(const Circuit &c);

/// Reward closure for the problem; caches the target state.
[[nodiscard]] RewardFn make_reward(const Problem &p);

/// Search root: one protected Hadamard per qubit.
[[nodiscard]] Circuit problem_root(const Problem &p);

[[nodiscard]] nlohmann::json to_json(const Problem &p);

/**
 * Problem reference as used in experiment configs:
 *   {"kind": "state-approx", "target": "targets/n4_low.json"}
 *   {"kind": "ground-state", "hamiltonian": "data/hamiltonians/H2_sto3g.json",
 *    "energy_reward": "spectral"}
 *   {"kind": "magic-max", "n": 4}
 * Relative paths resolve against base_dir.
 */
[[nodiscard]] Problem problem_from_json(const nlohmann::json &j,
                                        const std::filesystem::path &base_dir = {});

} // namespace mqas
