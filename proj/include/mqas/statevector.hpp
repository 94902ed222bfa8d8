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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mqas/circuit.hpp"

namespace mqas {

using Complex = std::complex<double>;

/// Largest register simulate() accepts.
inline constexpr std::size_t kMaxSimulatedQubits = 24;

class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Dense pure state over n qubits. Qubit q is bit q of the amplitude index,
 * so qubit 0 is the least-significant bit.
 */
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n);
    StateVector(std::size_t n, std::vector<Complex> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm_squared() const noexcept;

    void apply(const GateOp &g);
    /// Applies exp(-i theta P / 2) for the single-qubit Pauli generator of a
    /// rotation kind; used for shifted and inverse gates.
    void apply_rotation(GateKind kind, std::uint32_t q, double theta);
    /// Applies the inverse of g.
    void apply_inverse(const GateOp &g);

    /// Tensor product with `low` occupying the low-order qubits.
    [[nodiscard]] static StateVector tensor(const StateVector &high, const StateVector &low);

  private:
    void apply_1q(std::uint32_t q, const Complex (&m)[2][2]);
    void apply_phase(std::uint32_t q, Complex phase);
    void apply_cx(std::uint32_t control, std::uint32_t target);

    std::size_t n_;
    std::vector<Complex> amps_;
};

/// U(c)|0...0>. Throws ResourceError above kMaxSimulatedQubits.
[[nodiscard]] StateVector simulate(const Circuit &c);

/// |<a|b>|^2; throws std::invalid_argument on size mismatch.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

} // namespace mqas
