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

#include "mqas/features.hpp"

#include <cmath>

namespace mqas {

namespace {

const std::vector<std::string_view> kNames{
    "num_qubits",
    "total_gates",
    "count_h",
    "count_s",
    "count_t",
    "count_cx",
    "count_rx",
    "count_ry",
    "count_rz",
    "parameterized_gates",
    "two_qubit_gates",
    "depth",
    "sum_sin2_2theta",
    "sum_abs_sin_theta",
    "t_count",
    "gates_per_qubit",
    "m2_bound",
    "active_sin2_2theta",
    "active_t_count",
    "saturated_magic_0p5",
    "saturated_magic_1",
    "saturated_magic_2",
    "saturated_magic_4",
    "saturated_depth",
};

std::size_t kind_slot(GateKind k) {
    switch (k) {
    case GateKind::H:
        return 2;
    case GateKind::S:
        return 3;
    case GateKind::T:
        return 4;
    case GateKind::CX:
        return 5;
    case GateKind::RX:
        return 6;
    case GateKind::RY:
        return 7;
    case GateKind::RZ:
        return 8;
    }
    return 2;
}

} // namespace

const std::vector<std::string_view> &feature_names() { return kNames; }

std::size_t feature_length() { return kNames.size(); }

FeatureVector features(const Circuit &c) {
    FeatureVector f(kNames.size(), 0.0);
    const auto n = static_cast<double>(c.num_qubits());
    f[0] = n;
    f[1] = static_cast<double>(c.size());

    // A wire stays "diagonal" while only Z-diagonal gates touched it; phase
    // rotations applied there cannot create magic.
    std::vector<bool> diagonal(c.num_qubits(), true);
    double active_sin2 = 0.0;
    double active_t = 0.0;
    for (const auto &g : c.gates()) {
        f[kind_slot(g.kind)] += 1.0;
        if (is_parameterized(g.kind)) {
            f[9] += 1.0;
            const double s2 = std::sin(2.0 * g.angle);
            f[12] += s2 * s2;
            f[13] += std::abs(std::sin(g.angle));
        }
        switch (g.kind) {
        case GateKind::CX:
            f[10] += 1.0;
            if (!(diagonal[g.qubits[0]] && diagonal[g.qubits[1]])) {
                diagonal[g.qubits[0]] = false;
                diagonal[g.qubits[1]] = false;
            }
            break;
        case GateKind::H:
            diagonal[g.qubits[0]] = false;
            break;
        case GateKind::RX:
        case GateKind::RY: {
            const double s2 = std::sin(2.0 * g.angle);
            active_sin2 += s2 * s2;
            diagonal[g.qubits[0]] = false;
            break;
        }
        case GateKind::RZ:
            if (!diagonal[g.qubits[0]]) {
                const double s2 = std::sin(2.0 * g.angle);
                active_sin2 += s2 * s2;
            }
            break;
        case GateKind::T:
            if (!diagonal[g.qubits[0]]) {
                active_t += 1.0;
            }
            break;
        case GateKind::S:
            break;
        }
    }
    f[11] = static_cast<double>(depth(c));
    f[14] = f[4];
    f[15] = f[1] / n;

    const double bound = std::log((std::exp2(n) + 1.0) / 2.0);
    f[16] = bound;
    f[17] = active_sin2;
    f[18] = active_t;
    // T contributes like a rotation with sin^2(2 theta) = 1
    const double magic_load = (active_sin2 + active_t) / n;
    f[19] = bound * (1.0 - std::exp(-0.5 * magic_load));
    f[20] = bound * (1.0 - std::exp(-1.0 * magic_load));
    f[21] = bound * (1.0 - std::exp(-2.0 * magic_load));
    f[22] = bound * (1.0 - std::exp(-4.0 * magic_load));
    f[23] = bound * (1.0 - std::exp(-f[11] / n));
    return f;
}

} // namespace mqas
