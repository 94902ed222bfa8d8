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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mqas/circuit.hpp"
#include "mqas/search.hpp"

namespace mqas {

enum class MagicLevel : std::uint8_t { Low, Medium, High };

[[nodiscard]] std::string_view level_name(MagicLevel l) noexcept;

struct TargetCircuit {
    std::size_t n{0};
    MagicLevel level{MagicLevel::Low};
    Circuit circuit;
    double m2{0.0};
    std::size_t cnot_count{0};
    std::size_t t_count{0};
};

/// Targets for one qubit count, plus the stabilizer-like working circuit the
/// magic-maximizing searches start from.
struct TargetTriple {
    std::size_t n{0};
    std::array<TargetCircuit, 3> levels;
    Circuit working;
    double working_m2{0.0};
    /// Attempts used; 1 when the first seed already gave a valid ordering.
    std::size_t attempts{1};
    std::uint64_t seed{0};
};

struct TargetSpec {
    std::vector<std::size_t> qubit_counts{4, 5, 6};
    std::size_t pool_size{10};
    std::size_t num_gates{20};
    std::vector<GateKind> gate_set{kCliffordTGateSet};
    /// (add, swap, change, delete): swap/change only keeps the gate count.
    ActionDistribution dist{0.0, 0.4, 0.6, 0.0};
    std::size_t short_budget{500};
    std::size_t long_budget{2000};
    std::size_t runs{10};
    std::size_t max_attempts{5};
    /// The working circuit must be at most this magic for an attempt to count.
    double working_m2_limit{0.05};
    std::uint64_t seed{0};
    std::size_t jobs{1};
};

struct TargetSet {
    TargetSpec spec;
    std::vector<TargetTriple> triples;

    [[nodiscard]] const TargetCircuit &get(std::size_t n, MagicLevel level) const;
};

/// Reads the keys present over a copy of base; unknown keys throw.
[[nodiscard]] TargetSpec target_spec_from_json(const nlohmann::json &j, TargetSpec base = {});

class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using TargetLog = std::function<void(const std::string &)>;

/// Pool of random circuits -> low target (pool argmax M2) and working
/// circuit (pool argmin); magic-max searches from the working circuit give
/// the medium (min over the short-budget runs) and high (max over the
/// long-budget runs) targets. Attempts whose ordering or working circuit is
/// off are redrawn with the next seed; GenerationError after max_attempts.
[[nodiscard]] TargetSet generate_targets(const TargetSpec &spec, const TargetLog &log = {});

[[nodiscard]] TargetTriple generate_target_triple(std::size_t n, const TargetSpec &spec,
                                                  std::uint64_t seed);

/// Writes n<N>_<level>.json, n<N>_working.json and manifest.csv
/// (n,level,m2,cnot_count,t_count).
void save_targets(const TargetSet &set, const std::filesystem::path &dir);
[[nodiscard]] std::filesystem::path target_path(const std::filesystem::path &dir, std::size_t n,
                                                MagicLevel level);

} // namespace mqas
