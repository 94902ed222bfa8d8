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

#include "mqas/pauli.hpp"

#include <bit>
#include <cmath>

#include "mqas/circuit_io.hpp"

namespace mqas {

using nlohmann::json;

PauliString::PauliString(std::size_t n, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_(n), x_(x_mask), z_(z_mask) {
    if (n > 63) {
        throw std::invalid_argument("Pauli strings are limited to 63 qubits");
    }
    const std::uint64_t valid = (std::uint64_t{1} << n) - 1;
    if ((x_ & ~valid) || (z_ & ~valid)) {
        throw std::invalid_argument("Pauli mask wider than the string");
    }
}

PauliString PauliString::parse(std::string_view text) {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    if (text.size() > 63) {
        throw std::invalid_argument("Pauli strings are limited to 63 qubits");
    }
    for (std::size_t q = 0; q < text.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (text[q]) {
        case 'I':
            break;
        case 'X':
            x |= bit;
            break;
        case 'Y':
            x |= bit;
            z |= bit;
            break;
        case 'Z':
            z |= bit;
            break;
        default:
            throw std::invalid_argument("invalid Pauli character '" + std::string(1, text[q]) +
                                        "' in \"" + std::string(text) + "\"");
        }
    }
    return PauliString(text.size(), x, z);
}

std::string PauliString::str() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        const bool xb = (x_ >> q) & 1U;
        const bool zb = (z_ >> q) & 1U;
        s[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

StateVector apply_pauli(const StateVector &s, const PauliString &p) {
    if (p.size() != s.num_qubits()) {
        throw std::invalid_argument("Pauli string length " + std::to_string(p.size()) +
                                    " does not match " + std::to_string(s.num_qubits()) +
                                    " qubits");
    }
    // P = i^{|x&z|} X^x Z^z
    static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex global = kIPow[std::popcount(p.x_mask() & p.z_mask()) % 4];
    std::vector<Complex> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const bool odd = std::popcount(i & p.z_mask()) & 1;
        out[i ^ p.x_mask()] = (odd ? -global : global) * s[i];
    }
    return StateVector(s.num_qubits(), std::move(out));
}

double pauli_expectation(const StateVector &s, const PauliString &p) {
    const Complex e = inner_product(s, apply_pauli(s, p));
    if (std::abs(e.imag()) > 1e-10) {
        throw std::logic_error("Pauli expectation has an imaginary part");
    }
    return e.real();
}

void PauliHamiltonian::validate() const {
    if (n == 0) {
        throw std::invalid_argument("Hamiltonian needs n >= 1");
    }
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].pauli.size() != n) {
            throw std::invalid_argument("terms[" + std::to_string(k) + "]: string length " +
                                        std::to_string(terms[k].pauli.size()) + " != n=" +
                                        std::to_string(n));
        }
        if (!std::isfinite(terms[k].coefficient)) {
            throw std::invalid_argument("terms[" + std::to_string(k) +
                                        "]: coefficient is not finite");
        }
    }
    if (refs) {
        if (!std::isfinite(refs->e_scf) || !std::isfinite(refs->e_fci)) {
            throw std::invalid_argument("refs: energies must be finite");
        }
        if (refs->e_fci > refs->e_scf) {
            throw std::invalid_argument("refs: e_fci must not exceed e_scf");
        }
    }
}

double PauliHamiltonian::coefficient_norm() const noexcept {
    double s = 0.0;
    for (const auto &t : terms) {
        s += std::abs(t.coefficient);
    }
    return s;
}

double PauliHamiltonian::energy_upper_bound() const noexcept {
    double s = 0.0;
    for (const auto &t : terms) {
        s += t.pauli.is_identity() ? t.coefficient : std::abs(t.coefficient);
    }
    return s;
}

double hamiltonian_expectation(const StateVector &s, const PauliHamiltonian &h) {
    if (h.n != s.num_qubits()) {
        throw std::invalid_argument("Hamiltonian acts on " + std::to_string(h.n) +
                                    " qubits, state has " + std::to_string(s.num_qubits()));
    }
    double e = 0.0;
    for (const auto &t : h.terms) {
        e += t.coefficient * (t.pauli.is_identity() ? 1.0 : pauli_expectation(s, t.pauli));
    }
    return e;
}

PauliHamiltonian hamiltonian_from_json_text(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("Hamiltonian JSON syntax error at " + line_column(text, e.byte) + ": " +
                             e.what(),
                         e.byte, "text");
    }
    auto bad = [](const std::string &loc, const std::string &msg) {
        return ParseError(loc + ": " + msg, 0, loc);
    };
    if (!j.is_object()) {
        throw bad("hamiltonian", "expected an object");
    }
    PauliHamiltonian h;
    h.label = j.value("label", std::string{});
    if (!j.contains("n") || !j["n"].is_number_unsigned()) {
        throw bad("n", "expected a positive integer");
    }
    h.n = j["n"].get<std::size_t>();
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw bad("terms", "expected an array of [pauli, coefficient] pairs");
    }
    for (std::size_t k = 0; k < j["terms"].size(); ++k) {
        const auto &t = j["terms"][k];
        const std::string loc = "terms[" + std::to_string(k) + "]";
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_number()) {
            throw bad(loc, "expected [\"PAULI\", coefficient]");
        }
        try {
            h.terms.push_back({PauliString::parse(t[0].get<std::string>()), t[1].get<double>()});
        } catch (const std::invalid_argument &e) {
            throw bad(loc, e.what());
        }
        if (h.terms.back().pauli.size() != h.n) {
            throw bad(loc, "string length " + std::to_string(h.terms.back().pauli.size()) +
                               " != n=" + std::to_string(h.n));
        }
    }
    if (j.contains("refs")) {
        const auto &r = j["refs"];
        if (!r.is_object() || !r.contains("e_scf") || !r.contains("e_fci") ||
            !r["e_scf"].is_number() || !r["e_fci"].is_number()) {
            throw bad("refs", "expected numeric e_scf and e_fci");
        }
        h.refs = ReferenceEnergies{r["e_scf"].get<double>(), r["e_fci"].get<double>()};
    }
    if (j.contains("metadata")) {
        h.metadata = j["metadata"];
    }
    try {
        h.validate();
    } catch (const std::invalid_argument &e) {
        throw bad("hamiltonian", e.what());
    }
    return h;
}

PauliHamiltonian load_hamiltonian(const std::filesystem::path &path) {
    try {
        return hamiltonian_from_json_text(read_text_file(path));
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what(), e.position(), e.location());
    }
}

json to_json(const PauliHamiltonian &h) {
    json j;
    j["label"] = h.label;
    j["n"] = h.n;
    j["terms"] = json::array();
    for (const auto &t : h.terms) {
        j["terms"].push_back(json::array({t.pauli.str(), t.coefficient}));
    }
    if (h.refs) {
        j["refs"] = {{"e_scf", h.refs->e_scf}, {"e_fci", h.refs->e_fci}};
    }
    if (!h.metadata.empty()) {
        j["metadata"] = h.metadata;
    }
    return j;
}

} // namespace mqas
