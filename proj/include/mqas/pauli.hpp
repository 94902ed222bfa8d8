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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mqas/statevector.hpp"

namespace mqas {

/**
 * n-qubit Pauli string in symplectic form: bit q of x_mask / z_mask says
 * whether X / Z acts on qubit q (both set means Y). Text form puts the
 * operator on qubit q at character q, e.g. "XIZ" is X on qubit 0, Z on 2.
 */
class PauliString {
  public:
    PauliString() = default;
    PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask);

    /// Throws std::invalid_argument on characters outside "IXYZ".
    [[nodiscard]] static PauliString parse(std::string_view text);
    [[nodiscard]] static PauliString identity(std::size_t n) { return {n, 0, 0}; }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
    [[nodiscard]] bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t n_{0};
    std::uint64_t x_{0};
    std::uint64_t z_{0};
};

/// P|s>.
[[nodiscard]] StateVector apply_pauli(const StateVector &s, const PauliString &p);

/// Re <s|P|s>. Throws std::invalid_argument on length mismatch.
[[nodiscard]] double pauli_expectation(const StateVector &s, const PauliString &p);

struct ReferenceEnergies {
    double e_scf{0.0};
    double e_fci{0.0};
};

struct PauliTerm {
    PauliString pauli;
    double coefficient{0.0};
};

struct PauliHamiltonian {
    std::string label;
    std::size_t n{0};
    std::vector<PauliTerm> terms;
    std::optional<ReferenceEnergies> refs;
    /// Free-form provenance carried through from the file.
    nlohmann::json metadata = nlohmann::json::object();

    /// Throws std::invalid_argument if lengths, coefficients or refs are
    /// inconsistent.
    void validate() const;
    /// Sum of |c_k|; bounds |<H>| for any normalized state.
    [[nodiscard]] double coefficient_norm() const noexcept;
    /// Identity coefficient plus |c_k| of every other term: an upper bound
    /// on <H>.
    [[nodiscard]] double energy_upper_bound() const noexcept;
};

[[nodiscard]] double hamiltonian_expectation(const StateVector &s, const PauliHamiltonian &h);

/// Parses the Hamiltonian JSON format; errors carry line/column or the JSON
/// location of the offending entry.
[[nodiscard]] PauliHamiltonian hamiltonian_from_json_text(std::string_view text);
[[nodiscard]] PauliHamiltonian load_hamiltonian(const std::filesystem::path &path);
[[nodiscard]] nlohmann::json to_json(const PauliHamiltonian &h);

} // namespace mqas
