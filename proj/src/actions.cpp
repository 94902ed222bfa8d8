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

#include "mqas/actions.hpp"

#include <algorithm>
#include <array>
#include <numbers>

namespace mqas {

namespace {

constexpr std::array<ActionClass, 4> kClasses{
    ActionClass::Add, ActionClass::Swap, ActionClass::Delete, ActionClass::Change};

std::vector<GateKind> usable_kinds(std::size_t n, const std::vector<GateKind> &set) {
    std::vector<GateKind> out;
    for (GateKind k : set) {
        if (k != GateKind::CX || n >= 2) {
            out.push_back(k);
        }
    }
    return out;
}

std::size_t uniform_index(std::size_t size, Rng &rng) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

} // namespace

std::string_view action_name(ActionClass a) noexcept {
    switch (a) {
    case ActionClass::Add:
        return "add";
    case ActionClass::Swap:
        return "swap";
    case ActionClass::Delete:
        return "delete";
    case ActionClass::Change:
        return "change";
    }
    return "?";
}

double ActionDistribution::weight(ActionClass a) const noexcept {
    switch (a) {
    case ActionClass::Add:
        return p_add;
    case ActionClass::Swap:
        return p_swap;
    case ActionClass::Delete:
        return p_delete;
    case ActionClass::Change:
        return p_change;
    }
    return 0.0;
}

ActionDistribution ActionDistribution::normalized() const {
    const double total = p_add + p_swap + p_change + p_delete;
    if (!(p_add >= 0 && p_swap >= 0 && p_change >= 0 && p_delete >= 0) ||
        !(total > 0)) {
        throw std::invalid_argument(
            "action distribution needs non-negative weights with positive sum");
    }
    return {p_add / total, p_swap / total, p_change / total, p_delete / total};
}

bool is_feasible(ActionClass a, const Circuit &c, std::size_t gate_cap) noexcept {
    switch (a) {
    case ActionClass::Add:
        return c.size() < gate_cap;
    case ActionClass::Swap:
    case ActionClass::Delete:
        return c.mutable_size() > 0;
    case ActionClass::Change:
        return std::any_of(c.gates().begin() + static_cast<std::ptrdiff_t>(c.prefix_len()),
                           c.gates().end(),
                           [](const GateOp &g) { return is_parameterized(g.kind); });
    }
    return false;
}

GateOp sample_gate(std::size_t n, const std::vector<GateKind> &gate_set, Rng &rng) {
    const auto kinds = usable_kinds(n, gate_set);
    if (kinds.empty()) {
        throw std::invalid_argument("gate set has no gate usable on " +
                                    std::to_string(n) + " qubit(s)");
    }
    const GateKind kind = kinds[uniform_index(kinds.size(), rng)];
    if (kind == GateKind::CX) {
        const auto control = static_cast<std::uint32_t>(uniform_index(n, rng));
        auto target = static_cast<std::uint32_t>(uniform_index(n - 1, rng));
        if (target >= control) {
            ++target;
        }
        return GateOp::cx(control, target);
    }
    const auto q = static_cast<std::uint32_t>(uniform_index(n, rng));
    double theta = 0.0;
    if (is_parameterized(kind)) {
        theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    }
    return GateOp::single(kind, q, theta);
}

std::pair<Circuit, Action> apply_action(const Circuit &c,
                                        const MutationSettings &settings, Rng &rng) {
    if (settings.gate_set.empty()) {
        throw std::invalid_argument("gate set is empty");
    }
    if (!(settings.delta_theta > 0)) {
        throw std::invalid_argument("delta_theta must be positive");
    }
    const auto dist = settings.dist.normalized();

    std::array<double, 4> weights{};
    for (std::size_t i = 0; i < kClasses.size(); ++i) {
        weights[i] = is_feasible(kClasses[i], c, settings.gate_cap)
                         ? dist.weight(kClasses[i])
                         : 0.0;
    }
    if (std::all_of(weights.begin(), weights.end(), [](double w) { return w <= 0; })) {
        throw NoFeasibleAction("no feasible action class for this circuit");
    }
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

    Action a;
    a.cls = kClasses[pick(rng)];
    const std::size_t n = c.num_qubits();
    switch (a.cls) {
    case ActionClass::Add:
        a.position = c.size();
        a.gate = sample_gate(n, settings.gate_set, rng);
        break;
    case ActionClass::Swap:
        a.position = c.prefix_len() + uniform_index(c.mutable_size(), rng);
        a.gate = sample_gate(n, settings.gate_set, rng);
        break;
    case ActionClass::Delete:
        a.position = c.prefix_len() + uniform_index(c.mutable_size(), rng);
        break;
    case ActionClass::Change: {
        std::vector<std::size_t> params;
        for (std::size_t i = c.prefix_len(); i < c.size(); ++i) {
            if (is_parameterized(c[i].kind)) {
                params.push_back(i);
            }
        }
        a.position = params[uniform_index(params.size(), rng)];
        a.epsilon = std::normal_distribution<double>(0.0, settings.delta_theta)(rng);
        break;
    }
    }
    return {apply(c, a), a};
}

Circuit apply(const Circuit &c, const Action &a) {
    switch (a.cls) {
    case ActionClass::Add:
        return c.appended(a.gate);
    case ActionClass::Swap:
        return c.replaced(a.position, a.gate);
    case ActionClass::Delete:
        return c.erased(a.position);
    case ActionClass::Change: {
        GateOp g = c[a.position];
        if (!is_parameterized(g.kind)) {
            throw std::invalid_argument("change action on a fixed gate");
        }
        g.angle += a.epsilon;
        return c.replaced(a.position, g);
    }
    }
    throw std::invalid_argument("unknown action class");
}

Circuit random_circuit(std::size_t n, std::size_t num_gates,
                       const std::vector<GateKind> &gate_set, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_circuit: n must be >= 1");
    }
    if (gate_set.empty()) {
        throw std::invalid_argument("random_circuit: empty gate set");
    }
    if (n < 2 && std::find(gate_set.begin(), gate_set.end(), GateKind::CX) != gate_set.end()) {
        throw std::invalid_argument("random_circuit: CX needs at least two qubits");
    }
    std::vector<GateOp> gates;
    gates.reserve(num_gates);
    for (std::size_t i = 0; i < num_gates; ++i) {
        gates.push_back(sample_gate(n, gate_set, rng));
    }
    return Circuit(n, std::move(gates), 0);
}

} // namespace mqas
