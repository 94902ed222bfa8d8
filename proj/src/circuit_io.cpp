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

#include "mqas/circuit_io.hpp"

#include <fstream>
#include <sstream>

namespace mqas {

using nlohmann::json;

json to_json(const GateOp &g) {
    json j;
    j["kind"] = std::string(gate_name(g.kind));
    j["qubits"] = json::array();
    for (auto q : g.wires()) {
        j["qubits"].push_back(q);
    }
    if (is_parameterized(g.kind)) {
        j["angle"] = g.angle;
    }
    return j;
}

json to_json(const Circuit &c) {
    json j;
    j["n"] = c.num_qubits();
    j["prefix_len"] = c.prefix_len();
    j["gates"] = json::array();
    for (const auto &g : c.gates()) {
        j["gates"].push_back(to_json(g));
    }
    return j;
}

namespace {

[[noreturn]] void fail(const std::string &loc, const std::string &msg) {
    throw ParseError(loc + ": " + msg, 0, loc);
}

std::size_t read_count(const json &j, const char *key, const std::string &loc) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        fail(loc + "." + key, "expected a non-negative integer");
    }
    return j[key].get<std::size_t>();
}

GateOp gate_from_json(const json &j, std::size_t n, const std::string &loc) {
    if (!j.is_object()) {
        fail(loc, "expected an object");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) {
        fail(loc + ".kind", "expected a gate name");
    }
    const auto kind = parse_gate_kind(j["kind"].get<std::string>());
    if (!kind) {
        fail(loc + ".kind", "unknown gate '" + j["kind"].get<std::string>() + "'");
    }
    if (!j.contains("qubits") || !j["qubits"].is_array() ||
        j["qubits"].size() != arity(*kind)) {
        fail(loc + ".qubits", "expected " + std::to_string(arity(*kind)) + " qubit index(es)");
    }
    GateOp g;
    g.kind = *kind;
    for (std::size_t i = 0; i < arity(*kind); ++i) {
        const auto &q = j["qubits"][i];
        if (!q.is_number_unsigned() || q.get<std::size_t>() >= n) {
            fail(loc + ".qubits", "qubit index out of range for n=" + std::to_string(n));
        }
        g.qubits[i] = q.get<std::uint32_t>();
    }
    if (g.kind == GateKind::CX && g.qubits[0] == g.qubits[1]) {
        fail(loc + ".qubits", "CX control equals target");
    }
    if (is_parameterized(*kind)) {
        if (!j.contains("angle") || !j["angle"].is_number()) {
            fail(loc + ".angle", "rotation gate needs a numeric angle");
        }
        g.angle = j["angle"].get<double>();
    } else if (j.contains("angle")) {
        fail(loc + ".angle", std::string(gate_name(*kind)) + " carries no angle");
    }
    return g;
}

} // namespace

Circuit circuit_from_json(const json &j) {
    if (!j.is_object()) {
        fail("circuit", "expected an object");
    }
    const std::size_t n = read_count(j, "n", "circuit");
    if (n == 0) {
        fail("circuit.n", "must be >= 1");
    }
    const std::size_t prefix = j.contains("prefix_len") ? read_count(j, "prefix_len", "circuit") : 0;
    if (!j.contains("gates") || !j["gates"].is_array()) {
        fail("circuit.gates", "expected an array");
    }
    std::vector<GateOp> gates;
    for (std::size_t i = 0; i < j["gates"].size(); ++i) {
        gates.push_back(gate_from_json(j["gates"][i], n, "gates[" + std::to_string(i) + "]"));
    }
    if (prefix > gates.size()) {
        fail("circuit.prefix_len", "exceeds gate count");
    }
    return Circuit(n, std::move(gates), prefix);
}

std::string serialize(const Circuit &c) { return to_json(c).dump(); }

Circuit deserialize(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed circuit JSON at ") + line_column(text, e.byte) +
                             ": " + e.what(),
                         e.byte, "text");
    }
    return circuit_from_json(j);
}

void save_circuit(const Circuit &c, const std::filesystem::path &path) {
    write_text_file(path, to_json(c).dump(2) + "\n");
}

Circuit load_circuit(const std::filesystem::path &path) {
    return deserialize(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

std::string line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(offset, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace mqas
