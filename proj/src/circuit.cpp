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

#include "mqas/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mqas {

std::string_view gate_name(GateKind k) noexcept {
    switch (k) {
    case GateKind::H:
        return "H";
    case GateKind::S:
        return "S";
    case GateKind::T:
        return "T";
    case GateKind::CX:
        return "CX";
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    if (name == "CNOT") {
        return GateKind::CX;
    }
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

GateOp GateOp::single(GateKind k, std::uint32_t q, double theta) {
    if (k == GateKind::CX) {
        throw std::invalid_argument("GateOp::single called with CX");
    }
    return GateOp{k, {q, 0}, is_parameterized(k) ? theta : 0.0};
}

GateOp GateOp::cx(std::uint32_t control, std::uint32_t target) {
    return GateOp{GateKind::CX, {control, target}, 0.0};
}

Circuit::Circuit(std::size_t num_qubits, std::vector<GateOp> gates,
                 std::size_t prefix_len)
    : n_(num_qubits), prefix_(prefix_len), gates_(std::move(gates)) {
    if (n_ == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    if (prefix_ > gates_.size()) {
        throw std::invalid_argument("prefix_len exceeds gate count");
    }
    for (const auto &g : gates_) {
        check_gate(g);
    }
}

void Circuit::check_gate(const GateOp &g) const {
    for (auto q : g.wires()) {
        if (q >= n_) {
            throw std::invalid_argument("qubit index " + std::to_string(q) +
                                        " out of range for " +
                                        std::to_string(n_) + " qubits");
        }
    }
    if (g.kind == GateKind::CX && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("CX control equals target");
    }
    if (!is_parameterized(g.kind) && g.angle != 0.0) {
        throw std::invalid_argument(std::string(gate_name(g.kind)) +
                                    " carries no angle");
    }
}

std::size_t Circuit::parameter_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(),
                      [](const GateOp &g) { return is_parameterized(g.kind); }));
}

std::size_t Circuit::count(GateKind k) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        gates_.begin(), gates_.end(),
        [k](const GateOp &g) { return g.kind == k; }));
}

std::vector<double> Circuit::angles() const {
    std::vector<double> out;
    for (const auto &g : gates_) {
        if (is_parameterized(g.kind)) {
            out.push_back(g.angle);
        }
    }
    return out;
}

Circuit Circuit::with_angles(std::span<const double> angles) const {
    if (angles.size() != parameter_count()) {
        throw std::invalid_argument("angle count does not match circuit");
    }
    Circuit out = *this;
    std::size_t k = 0;
    for (auto &g : out.gates_) {
        if (is_parameterized(g.kind)) {
            g.angle = angles[k++];
        }
    }
    return out;
}

Circuit Circuit::appended(const GateOp &g) const {
    check_gate(g);
    Circuit out = *this;
    out.gates_.push_back(g);
    return out;
}

Circuit Circuit::replaced(std::size_t pos, const GateOp &g) const {
    if (pos < prefix_ || pos >= gates_.size()) {
        throw std::out_of_range("replace position outside mutable suffix");
    }
    check_gate(g);
    Circuit out = *this;
    out.gates_[pos] = g;
    return out;
}

Circuit Circuit::erased(std::size_t pos) const {
    if (pos < prefix_ || pos >= gates_.size()) {
        throw std::out_of_range("erase position outside mutable suffix");
    }
    Circuit out = *this;
    out.gates_.erase(out.gates_.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
}

Circuit new_root(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("new_root: n must be >= 1");
    }
    std::vector<GateOp> gates;
    gates.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        gates.push_back(GateOp::single(GateKind::H, static_cast<std::uint32_t>(q)));
    }
    return Circuit(n, std::move(gates), n);
}

Dag to_dag(const Circuit &c) {
    Dag dag;
    dag.num_nodes = c.size();
    // last gate seen on each wire
    std::vector<std::ptrdiff_t> last(c.num_qubits(), -1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto wires = c[i].wires();
        std::vector<std::size_t> preds;
        for (auto q : wires) {
            if (last[q] >= 0) {
                preds.push_back(static_cast<std::size_t>(last[q]));
            }
            last[q] = static_cast<std::ptrdiff_t>(i);
        }
        // a CX following a CX on the same pair yields one edge, not two
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
        for (auto p : preds) {
            dag.edges.emplace_back(p, i);
        }
    }
    return dag;
}

std::size_t Dag::depth() const {
    // Nodes are in circuit order, which is a topological order.
    std::vector<std::size_t> longest(num_nodes, 1);
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto &a, const auto &b) { return a.second < b.second; });
    for (const auto &[from, to] : sorted) {
        longest[to] = std::max(longest[to], longest[from] + 1);
    }
    std::size_t best = 0;
    for (auto l : longest) {
        best = std::max(best, l);
    }
    return best;
}

} // namespace mqas
