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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mqas {

enum class GateKind : std::uint8_t { H, S, T, CX, RX, RY, RZ };

inline constexpr std::array<GateKind, 7> kAllGateKinds{
    GateKind::H,  GateKind::S,  GateKind::T, GateKind::CX,
    GateKind::RX, GateKind::RY, GateKind::RZ};

/// Gate set the architecture search samples from.
inline const std::vector<GateKind> kSearchGateSet{GateKind::CX, GateKind::RX,
                                                  GateKind::RY, GateKind::RZ};
/// Clifford+T set used for target-state circuits.
inline const std::vector<GateKind> kCliffordTGateSet{
    GateKind::CX, GateKind::H, GateKind::S, GateKind::T};
/// Gate set of the random-circuit magic datasets.
inline const std::vector<GateKind> kDatasetGateSet{
    GateKind::CX, GateKind::H, GateKind::RX, GateKind::RY, GateKind::RZ};

[[nodiscard]] constexpr bool is_parameterized(GateKind k) noexcept {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

[[nodiscard]] constexpr std::size_t arity(GateKind k) noexcept {
    return k == GateKind::CX ? 2 : 1;
}

[[nodiscard]] std::string_view gate_name(GateKind k) noexcept;

/// Parses "H", "S", "T", "CX" (alias "CNOT"), "RX", "RY", "RZ".
[[nodiscard]] std::optional<GateKind> parse_gate_kind(std::string_view name);

struct GateOp {
    GateKind kind{GateKind::H};
    /// For CX: {control, target}. Single-qubit gates use qubits[0] only.
    std::array<std::uint32_t, 2> qubits{0, 0};
    /// Radians; meaningful only for RX/RY/RZ and zero otherwise.
    double angle{0.0};

    [[nodiscard]] std::span<const std::uint32_t> wires() const noexcept {
        return {qubits.data(), arity(kind)};
    }
    [[nodiscard]] bool acts_on(std::uint32_t q) const noexcept {
        return qubits[0] == q || (kind == GateKind::CX && qubits[1] == q);
    }

    static GateOp single(GateKind k, std::uint32_t q, double theta = 0.0);
    static GateOp cx(std::uint32_t control, std::uint32_t target);

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/**
 * Ordered gate sequence on a fixed number of qubits.
 *
 * The first prefix_len gates form a protected prefix: the mutation actions
 * never modify, replace or delete them.
 */
class Circuit {
  public:
    Circuit() = default;
    /// Throws std::invalid_argument if any gate or the prefix is invalid.
    Circuit(std::size_t num_qubits, std::vector<GateOp> gates,
            std::size_t prefix_len = 0);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t prefix_len() const noexcept { return prefix_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const std::vector<GateOp> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] const GateOp &operator[](std::size_t i) const {
        return gates_[i];
    }

    /// Number of gates outside the protected prefix.
    [[nodiscard]] std::size_t mutable_size() const noexcept {
        return gates_.size() - prefix_;
    }
    [[nodiscard]] std::size_t parameter_count() const noexcept;
    [[nodiscard]] std::size_t count(GateKind k) const noexcept;
    [[nodiscard]] std::vector<double> angles() const;

    /// Same structure with the rotation angles replaced in circuit order.
    [[nodiscard]] Circuit with_angles(std::span<const double> angles) const;

    // Value-returning edits used by the action layer; all validate.
    [[nodiscard]] Circuit appended(const GateOp &g) const;
    [[nodiscard]] Circuit replaced(std::size_t pos, const GateOp &g) const;
    [[nodiscard]] Circuit erased(std::size_t pos) const;

    /// Throws std::invalid_argument if g is not valid on num_qubits() qubits.
    void check_gate(const GateOp &g) const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_{1};
    std::size_t prefix_{0};
    std::vector<GateOp> gates_;
};

/// One Hadamard per qubit, all protected.
[[nodiscard]] Circuit new_root(std::size_t n);

/// Gate dependency graph: an edge a -> b whenever b is the next gate on
/// some wire a acts on.
struct Dag {
    std::size_t num_nodes{0};
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Longest path counted in nodes; 0 for an empty circuit.
    [[nodiscard]] std::size_t depth() const;
};

[[nodiscard]] Dag to_dag(const Circuit &c);

[[nodiscard]] inline std::size_t depth(const Circuit &c) {
    return to_dag(c).depth();
}

} // namespace mqas
