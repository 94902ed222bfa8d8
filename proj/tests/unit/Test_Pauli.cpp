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

#include <catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "TestHelpers.hpp"
#include "mqas/circuit_io.hpp"
#include "mqas/pauli.hpp"

using namespace mqas;
using namespace mqas::test;

namespace {

const std::string kH2 = std::string(MQAS_SOURCE_DIR) + "/data/hamiltonians/H2_sto3g.json";

Eigen::MatrixXcd dense_hamiltonian(const PauliHamiltonian &h) {
    const std::size_t dim = std::size_t{1} << h.n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> amps(dim, 0.0);
        amps[col] = 1.0;
        const StateVector basis(h.n, amps);
        for (const auto &t : h.terms) {
            const auto out = apply_pauli(basis, t.pauli);
            for (std::size_t row = 0; row < dim; ++row) {
                m(row, col) += t.coefficient * out[row];
            }
        }
    }
    return m;
}

} // namespace

TEST_CASE("Pauli::parse and print", "[Pauli]") {
    const auto p = PauliString::parse("XIYZ");
    CHECK(p.size() == 4);
    CHECK(p.x_mask() == 0b0101);
    CHECK(p.z_mask() == 0b1100);
    CHECK(p.str() == "XIYZ");
    CHECK(PauliString::identity(3).is_identity());
    CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
}

TEST_CASE("Pauli::expectation matches the dense oracle", "[Pauli]") {
    const auto strings = all_pauli_strings(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = random_test_circuit(3, 20, seed);
        const auto s = simulate(c);
        const auto d = dense_simulate(c);
        for (const auto &p : strings) {
            CAPTURE(seed, p);
            REQUIRE(pauli_expectation(s, PauliString::parse(p)) ==
                    Catch::Approx(dense_pauli_expectation(d, p)).margin(1e-12));
        }
    }
    CHECK_THROWS_AS(pauli_expectation(StateVector(2), PauliString::parse("XXX")),
                    std::invalid_argument);
}

TEST_CASE("Pauli::identity-only Hamiltonian", "[Pauli]") {
    const auto h = hamiltonian_from_json_text(R"({"n": 4, "terms": [["IIII", -1.0]]})");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CHECK(hamiltonian_expectation(simulate(random_test_circuit(4, 15, seed)), h) ==
              Catch::Approx(-1.0));
    }
}

TEST_CASE("Pauli::Hamiltonian validation", "[Pauli]") {
    CHECK_THROWS_AS(hamiltonian_from_json_text(
                        R"({"n": 2, "terms": [["ZZ", 1.0]], "refs": {"e_scf": -2.0, "e_fci": -1.0}})"),
                    ParseError);
    try {
        (void)hamiltonian_from_json_text(R"({"n": 2, "terms": [["ZZ", 1.0], ["XXX", 0.5]]})");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.location() == "terms[1]");
    }
    try {
        (void)hamiltonian_from_json_text("{\"n\": 2,\n \"terms\": [[\"ZZ\" 1.0]]}");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("Pauli::bundled H2 Hamiltonian", "[Pauli]") {
    const auto h = load_hamiltonian(kH2);
    REQUIRE(h.n == 4);
    REQUIRE(h.refs.has_value());
    CHECK(h.refs->e_fci <= h.refs->e_scf);

    // Hartree-Fock determinant: the two lowest spin orbitals occupied.
    const std::size_t hf = h.metadata.at("hartree_fock_basis_index").get<std::size_t>();
    std::vector<Complex> amps(16, 0.0);
    amps[hf] = 1.0;
    CHECK(hamiltonian_expectation(StateVector(4, amps), h) ==
          Catch::Approx(h.refs->e_scf).margin(1e-8));

    // FCI is the ground-state energy of the qubit Hamiltonian.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense_hamiltonian(h));
    CHECK(eig.eigenvalues()(0) == Catch::Approx(h.refs->e_fci).margin(1e-8));
    CHECK(h.energy_upper_bound() >= eig.eigenvalues()(15) - 1e-12);
}

TEST_CASE("Pauli::Hamiltonian JSON round trip", "[Pauli]") {
    const auto h = load_hamiltonian(kH2);
    const auto back = hamiltonian_from_json_text(to_json(h).dump());
    REQUIRE(back.terms.size() == h.terms.size());
    for (std::size_t k = 0; k < h.terms.size(); ++k) {
        CHECK(back.terms[k].pauli == h.terms[k].pauli);
        CHECK(back.terms[k].coefficient == h.terms[k].coefficient);
    }
    CHECK(back.refs->e_scf == h.refs->e_scf);
}
