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

#include "mqas/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mqas {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_register(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n > kMaxSimulatedQubits) {
        throw ResourceError("cannot simulate " + std::to_string(n) + " qubits (cap " +
                            std::to_string(kMaxSimulatedQubits) + ")");
    }
}

} // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    check_register(n);
    amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n, std::vector<Complex> amps)
    : n_(n), amps_(std::move(amps)) {
    check_register(n);
    if (amps_.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("amplitude count must be 2^n");
    }
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::apply_1q(std::uint32_t q, const Complex (&m)[2][2]) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | bit];
        amps_[i] = m[0][0] * a0 + m[0][1] * a1;
        amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void StateVector::apply_phase(std::uint32_t q, Complex phase) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) {
            amps_[i] *= phase;
        }
    }
}

void StateVector::apply_cx(std::uint32_t control, std::uint32_t target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void StateVector::apply_rotation(GateKind kind, std::uint32_t q, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    switch (kind) {
    case GateKind::RX: {
        const Complex m[2][2] = {{c, Complex(0, -s)}, {Complex(0, -s), c}};
        apply_1q(q, m);
        break;
    }
    case GateKind::RY: {
        const Complex m[2][2] = {{c, -s}, {s, c}};
        apply_1q(q, m);
        break;
    }
    case GateKind::RZ: {
        const Complex m[2][2] = {{Complex(c, -s), 0.0}, {0.0, Complex(c, s)}};
        apply_1q(q, m);
        break;
    }
    default:
        throw std::invalid_argument("apply_rotation needs RX, RY or RZ");
    }
}

void StateVector::apply(const GateOp &g) {
    if (g.qubits[0] >= n_ || (g.kind == GateKind::CX && g.qubits[1] >= n_)) {
        throw std::invalid_argument("gate acts outside the register");
    }
    switch (g.kind) {
    case GateKind::H: {
        const Complex m[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
        apply_1q(g.qubits[0], m);
        break;
    }
    case GateKind::S:
        apply_phase(g.qubits[0], Complex(0.0, 1.0));
        break;
    case GateKind::T:
        apply_phase(g.qubits[0], Complex(kInvSqrt2, kInvSqrt2));
        break;
    case GateKind::CX:
        apply_cx(g.qubits[0], g.qubits[1]);
        break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        apply_rotation(g.kind, g.qubits[0], g.angle);
        break;
    }
}

void StateVector::apply_inverse(const GateOp &g) {
    switch (g.kind) {
    case GateKind::S:
        apply_phase(g.qubits[0], Complex(0.0, -1.0));
        break;
    case GateKind::T:
        apply_phase(g.qubits[0], Complex(kInvSqrt2, -kInvSqrt2));
        break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        apply_rotation(g.kind, g.qubits[0], -g.angle);
        break;
    default: // H and CX are self-inverse
        apply(g);
        break;
    }
}

StateVector StateVector::tensor(const StateVector &high, const StateVector &low) {
    std::vector<Complex> amps(high.dim() * low.dim());
    for (std::size_t h = 0; h < high.dim(); ++h) {
        for (std::size_t l = 0; l < low.dim(); ++l) {
            amps[h * low.dim() + l] = high.amps_[h] * low.amps_[l];
        }
    }
    return StateVector(high.n_ + low.n_, std::move(amps));
}

StateVector simulate(const Circuit &c) {
    StateVector s(c.num_qubits());
    for (const auto &g : c.gates()) {
        s.apply(g);
    }
    return s;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

} // namespace mqas
