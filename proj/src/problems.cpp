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

#include "mqas/problems.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "mqas/circuit_io.hpp"
#include "mqas/magic.hpp"

namespace mqas {

using nlohmann::json;

std::string_view problem_kind_name(ProblemKind k) noexcept {
    switch (k) {
    case ProblemKind::StateApprox:
        return "state-approx";
    case ProblemKind::GroundState:
        return "ground-state";
    case ProblemKind::MagicMax:
        return "magic-max";
    }
    return "?";
}

std::string_view energy_mode_name(EnergyRewardMode m) noexcept {
    return m == EnergyRewardMode::Spectral ? "spectral" : "scf-fci";
}

std::optional<EnergyRewardMode> parse_energy_mode(std::string_view s) {
    if (s == "spectral") {
        return EnergyRewardMode::Spectral;
    }
    if (s == "scf-fci") {
        return EnergyRewardMode::ScfFci;
    }
    return std::nullopt;
}

Problem state_approx_problem(std::string id, Circuit target) {
    Problem p;
    p.kind = ProblemKind::StateApprox;
    p.id = std::move(id);
    p.n = target.num_qubits();
    p.target = std::move(target);
    return p;
}

Problem ground_state_problem(std::string id, PauliHamiltonian h, EnergyRewardMode mode) {
    if (!h.refs) {
        throw std::invalid_argument("Hamiltonian '" + h.label +
                                    "' has no reference energies (e_scf, e_fci)");
    }
    h.validate();
    Problem p;
    p.kind = ProblemKind::GroundState;
    p.id = std::move(id);
    p.n = h.n;
    p.hamiltonian = std::move(h);
    p.energy_mode = mode;
    return p;
}

Problem magic_max_problem(std::size_t n) {
    Problem p;
    p.kind = ProblemKind::MagicMax;
    p.id = "magic-max-n" + std::to_string(n);
    p.n = n;
    return p;
}

double fidelity_reward(const Circuit &c, const StateVector &target) {
    if (c.num_qubits() != target.num_qubits()) {
        throw std::invalid_argument("fidelity_reward: qubit count mismatch");
    }
    return fidelity(simulate(c), target);
}

double fidelity_reward(const Circuit &c, const Circuit &target) {
    if (c.num_qubits() != target.num_qubits()) {
        throw std::invalid_argument("fidelity_reward: qubit count mismatch");
    }
    return fidelity(simulate(c), simulate(target));
}

double energy_to_reward(double e, const PauliHamiltonian &h, EnergyRewardMode mode) {
    if (!h.refs) {
        throw std::invalid_argument("energy reward needs reference energies");
    }
    const double lo = h.refs->e_fci;
    const double hi = mode == EnergyRewardMode::ScfFci ? h.refs->e_scf : h.energy_upper_bound();
    if (!(hi > lo)) {
        return e <= lo ? 1.0 : 0.0;
    }
    return std::clamp((hi - e) / (hi - lo), 0.0, 1.0);
}

double energy(const Circuit &c, const PauliHamiltonian &h) {
    if (c.num_qubits() != h.n) {
        throw std::invalid_argument("energy: qubit count mismatch");
    }
    return hamiltonian_expectation(simulate(c), h);
}

double energy_reward(const Circuit &c, const PauliHamiltonian &h, EnergyRewardMode mode) {
    return energy_to_reward(energy(c, h), h, mode);
}

double magic_reward(const Circuit &c) {
    const auto n = c.num_qubits();
    return std::clamp(m2_exact(simulate(c)).value / m2_max(n), 0.0, 1.0);
}

RewardFn make_reward(const Problem &p) {
    switch (p.kind) {
    case ProblemKind::StateApprox: {
        if (!p.target) {
            throw std::invalid_argument("state-approx problem without a target");
        }
        auto target = std::make_shared<const StateVector>(simulate(*p.target));
        return [target](const Circuit &c) { return fidelity_reward(c, *target); };
    }
    case ProblemKind::GroundState: {
        if (!p.hamiltonian) {
            throw std::invalid_argument("ground-state problem without a Hamiltonian");
        }
        auto h = std::make_shared<const PauliHamiltonian>(*p.hamiltonian);
        const auto mode = p.energy_mode;
        return [h, mode](const Circuit &c) { return energy_reward(c, *h, mode); };
    }
    case ProblemKind::MagicMax:
        if (p.n > kMaxExactMagicQubits) {
            throw ResourceError("magic-max reward limited to " +
                                std::to_string(kMaxExactMagicQubits) + " qubits");
        }
        return [](const Circuit &c) { return magic_reward(c); };
    }
    throw std::logic_error("unreachable");
}

Circuit problem_root(const Problem &p) { return new_root(p.n); }

json to_json(const Problem &p) {
    json j{{"kind", std::string(problem_kind_name(p.kind))}, {"id", p.id}, {"n", p.n}};
    if (p.target) {
        j["target"] = to_json(*p.target);
    }
    if (p.hamiltonian) {
        j["hamiltonian"] = p.hamiltonian->label;
        j["energy_reward"] = std::string(energy_mode_name(p.energy_mode));
        j["e_scf"] = p.hamiltonian->refs->e_scf;
        j["e_fci"] = p.hamiltonian->refs->e_fci;
        j["energy_upper_bound"] = p.hamiltonian->energy_upper_bound();
    }
    return j;
}

namespace {

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p) {
    std::filesystem::path path(p);
    if (path.is_relative() && !base.empty()) {
        path = base / path;
    }
    return path;
}

} // namespace

Problem problem_from_json(const json &j, const std::filesystem::path &base_dir) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("problem must be an object with a 'kind'");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "state-approx") {
        if (!j.contains("target")) {
            throw std::invalid_argument("state-approx problem needs 'target'");
        }
        const auto &t = j["target"];
        if (t.is_string()) {
            const auto path = resolve(base_dir, t.get<std::string>());
            return state_approx_problem(j.value("id", path.stem().string()), load_circuit(path));
        }
        return state_approx_problem(j.value("id", std::string("state-approx")),
                                    circuit_from_json(t));
    }
    if (kind == "ground-state") {
        if (!j.contains("hamiltonian")) {
            throw std::invalid_argument("ground-state problem needs 'hamiltonian'");
        }
        const auto path = resolve(base_dir, j["hamiltonian"].get<std::string>());
        auto h = load_hamiltonian(path);
        EnergyRewardMode mode = EnergyRewardMode::Spectral;
        if (j.contains("energy_reward")) {
            const auto m = parse_energy_mode(j["energy_reward"].get<std::string>());
            if (!m) {
                throw std::invalid_argument("unknown energy_reward '" +
                                            j["energy_reward"].get<std::string>() + "'");
            }
            mode = *m;
        }
        std::string id = j.value("id", h.label.empty() ? path.stem().string() : h.label);
        return ground_state_problem(std::move(id), std::move(h), mode);
    }
    if (kind == "magic-max") {
        return magic_max_problem(j.at("n").get<std::size_t>());
    }
    throw std::invalid_argument("unknown problem kind '" + kind + "'");
}

} // namespace mqas
