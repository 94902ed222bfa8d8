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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "mqas/actions.hpp"
#include "mqas/circuit.hpp"
#include "mqas/pauli.hpp"
#include "mqas/statevector.hpp"

namespace mqas::test {

using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;

/// Textbook 2x2 matrix of a single-qubit gate.
inline Dense gate_matrix(GateKind k, double t) {
    const cplx i{0.0, 1.0};
    const double r = 1.0 / std::sqrt(2.0);
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    switch (k) {
    case GateKind::H:
        return {{r, r}, {r, -r}};
    case GateKind::S:
        return {{1.0, 0.0}, {0.0, i}};
    case GateKind::T:
        return {{1.0, 0.0}, {0.0, std::exp(i * (M_PI / 4))}};
    case GateKind::RX:
        return {{c, -i * s}, {-i * s, c}};
    case GateKind::RY:
        return {{c, -s}, {s, c}};
    case GateKind::RZ:
        return {{std::exp(-i * (t / 2)), 0.0}, {0.0, std::exp(i * (t / 2))}};
    default:
        return {};
    }
}

/// Dense simulation through explicit index arithmetic on the full matrix
/// action; independent of the library's kernels.
inline std::vector<cplx> dense_simulate(const Circuit &c) {
    const std::size_t n = c.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cplx> psi(dim, 0.0);
    psi[0] = 1.0;
    for (const auto &g : c.gates()) {
        std::vector<cplx> out(dim, 0.0);
        if (g.kind == GateKind::CX) {
            for (std::size_t col = 0; col < dim; ++col) {
                std::size_t row = col;
                if ((col >> g.qubits[0]) & 1U) {
                    row ^= std::size_t{1} << g.qubits[1];
                }
                out[row] += psi[col];
            }
        } else {
            const auto m = gate_matrix(g.kind, g.angle);
            const std::size_t q = g.qubits[0];
            for (std::size_t row = 0; row < dim; ++row) {
                for (std::size_t col = 0; col < dim; ++col) {
                    if ((row & ~(std::size_t{1} << q)) != (col & ~(std::size_t{1} << q))) {
                        continue;
                    }
                    out[row] += m[(row >> q) & 1U][(col >> q) & 1U] * psi[col];
                }
            }
        }
        psi = std::move(out);
    }
    return psi;
}

/// <psi|P|psi> with P built from its characters, qubit k at character k.
inline double dense_pauli_expectation(const std::vector<cplx> &psi, const std::string &p) {
    const cplx i{0.0, 1.0};
    const std::size_t dim = psi.size();
    cplx acc = 0.0;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = col;
        cplx phase = 1.0;
        for (std::size_t q = 0; q < p.size(); ++q) {
            const bool bit = (col >> q) & 1U;
            switch (p[q]) {
            case 'X':
                row ^= std::size_t{1} << q;
                break;
            case 'Y':
                row ^= std::size_t{1} << q;
                phase *= bit ? -i : i;
                break;
            case 'Z':
                phase *= bit ? -1.0 : 1.0;
                break;
            default:
                break;
            }
        }
        acc += std::conj(psi[row]) * phase * psi[col];
    }
    return acc.real();
}

/// All 4^n Pauli strings as text.
inline std::vector<std::string> all_pauli_strings(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::string> next;
        for (const auto &s : out) {
            for (char ch : {'I', 'X', 'Y', 'Z'}) {
                next.push_back(s + ch);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// M2 by enumerating every Pauli string on the dense state.
inline double brute_force_m2(const Circuit &c) {
    const auto psi = dense_simulate(c);
    const std::size_t n = c.num_qubits();
    double acc = 0.0;
    for (const auto &p : all_pauli_strings(n)) {
        const double e = dense_pauli_expectation(psi, p);
        acc += e * e * e * e;
    }
    return -std::log(acc / std::pow(2.0, static_cast<double>(n)));
}

inline Circuit random_test_circuit(std::size_t n, std::size_t gates, std::uint64_t seed,
                                   const std::vector<GateKind> &set = kDatasetGateSet) {
    Rng rng(seed);
    std::vector<GateKind> kinds = set;
    if (n < 2) {
        std::erase(kinds, GateKind::CX);
    }
    return random_circuit(n, gates, kinds, rng);
}

} // namespace mqas::test
