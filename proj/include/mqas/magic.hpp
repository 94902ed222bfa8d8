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
#include <string_view>

#include "mqas/actions.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

/// Exact stabilizer Renyi entropy is refused above this many qubits.
inline constexpr std::size_t kMaxExactMagicQubits = 10;
/// A one-time warning is printed above this many qubits.
inline constexpr std::size_t kExactMagicWarnQubits = 8;

enum class MagicMethod : std::uint8_t { Exact, Sampled, Surrogate };

[[nodiscard]] std::string_view method_name(MagicMethod m) noexcept;

struct MagicEstimate {
    /// Stabilizer 2-Renyi entropy in nats.
    double value{0.0};
    MagicMethod method{MagicMethod::Exact};
    /// Sampled estimator only: every sampled expectation was zero and the
    /// value was pinned to m2_max.
    bool degenerate{false};
};

/// ln((2^n + 1) / 2), the largest M2 any n-qubit state can reach.
[[nodiscard]] double m2_max(std::size_t n);

/**
 * M2 = -ln( sum_P <P>^4 / 2^n ) over all 4^n Pauli strings.
 *
 * For each X-pattern x the Z-pattern expectations are the Walsh-Hadamard
 * transform of conj(psi[i ^ x]) psi[i], so the full sum costs O(n 4^n)
 * instead of O(8^n). Throws ResourceError above kMaxExactMagicQubits.
 */
[[nodiscard]] MagicEstimate m2_exact(const StateVector &s);

enum class PauliSampling : std::uint8_t {
    Uniform,   ///< K strings drawn uniformly with replacement.
    Exhaustive ///< every string exactly once; K is ignored.
};

/**
 * Monte-Carlo M2: W = mean of <P>^4 over the sampled strings estimates
 * sum_P Xi_P^2 = sum_P <P>^4 / 4^n without bias, and the value is
 * clamp(-ln W - ln 2^n, 0, m2_max(n)). The log makes the estimate biased
 * (but consistent) at finite K.
 */
[[nodiscard]] MagicEstimate m2_sampled(const StateVector &s, std::size_t samples, Rng &rng,
                                       PauliSampling mode = PauliSampling::Uniform);

} // namespace mqas
