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

#include "mqas/qfi.hpp"

#include <algorithm>

#include "mqas/pauli.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

namespace {

PauliString generator(const GateOp &g, std::size_t n) {
    const std::uint64_t bit = std::uint64_t{1} << g.qubits[0];
    switch (g.kind) {
    case GateKind::RX:
        return {n, bit, 0};
    case GateKind::RY:
        return {n, bit, bit};
    default:
        return {n, 0, bit};
    }
}

} // namespace

QfiSummary qfi_trace(const Circuit &c) {
    QfiSummary q;
    StateVector s(c.num_qubits());
    for (const auto &g : c.gates()) {
        s.apply(g);
        if (!is_parameterized(g.kind)) {
            continue;
        }
        const double e = pauli_expectation(s, generator(g, c.num_qubits()));
        const double f = std::clamp(1.0 - e * e, 0.0, 1.0);
        q.diagonal.push_back(f);
        q.trace += f;
    }
    q.parameter_count = q.diagonal.size();
    return q;
}

nlohmann::json to_json(const QfiSummary &q) {
    return {{"trace", q.trace}, {"diagonal", q.diagonal}, {"parameter_count", q.parameter_count}};
}

} // namespace mqas
