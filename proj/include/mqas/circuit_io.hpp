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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mqas/circuit.hpp"

namespace mqas {

/// Malformed or invalid input text. position is a byte offset for syntax
/// errors; location names the offending element (e.g. "gates[3].qubits").
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &what, std::size_t position, std::string location)
        : std::runtime_error(what), position_(position), location_(std::move(location)) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }
    [[nodiscard]] const std::string &location() const noexcept { return location_; }

  private:
    std::size_t position_;
    std::string location_;
};

[[nodiscard]] nlohmann::json to_json(const GateOp &g);
[[nodiscard]] nlohmann::json to_json(const Circuit &c);

/// Throws ParseError with location on any schema or range violation.
[[nodiscard]] Circuit circuit_from_json(const nlohmann::json &j);

/// Compact JSON; angles round-trip bit-exactly.
[[nodiscard]] std::string serialize(const Circuit &c);
[[nodiscard]] Circuit deserialize(std::string_view text);

void save_circuit(const Circuit &c, const std::filesystem::path &path);
[[nodiscard]] Circuit load_circuit(const std::filesystem::path &path);

/// Reads a whole file; throws std::runtime_error if it cannot be opened.
[[nodiscard]] std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

/// Converts a byte offset in text into "line L, column C" (1-based).
[[nodiscard]] std::string line_column(std::string_view text, std::size_t offset);

} // namespace mqas
