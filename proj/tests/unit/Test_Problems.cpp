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

#include <filesystem>

#include "TestHelpers.hpp"
#include "mqas/circuit_io.hpp"
#include "mqas/magic.hpp"
#include "mqas/problems.hpp"
#include "mqas/targets.hpp"

using namespace mqas;
using namespace mqas::test;

namespace {

const std::string kH2 = std::string(MQAS_SOURCE_DIR) + "/data/hamiltonians/H2_sto3g.json";

PauliHamiltonian toy(double e_scf, double e_fci) {
    PauliHamiltonian h;
    h.n = 1;
    h.terms = {{PauliString::parse("Z"), 1.0}};
    h.refs = ReferenceEnergies{e_scf, e_fci};
    return h;
}

} // namespace

TEST_CASE("Problems::fidelity reward", "[Problems]") {
    const auto target = random_test_circuit(3, 15, 1);
    CHECK(fidelity_reward(target, target) == Catch::Approx(1.0));

    // Basis-state target |011>; flipping an occupied qubit is orthogonal.
    const Circuit basis(3, {GateOp::single(GateKind::RX, 0, M_PI), GateOp::single(GateKind::RX, 1, M_PI)});
    const auto flipped = basis.appended(GateOp::single(GateKind::RX, 1, M_PI));
    CHECK(fidelity_reward(flipped, basis) == Catch::Approx(0.0).margin(1e-12));
    const auto partial = basis.appended(GateOp::single(GateKind::RX, 1, M_PI / 3));
    CHECK(fidelity_reward(partial, basis) == Catch::Approx(std::pow(std::cos(M_PI / 6), 2)));

    for (std::uint64_t s = 0; s < 20; ++s) {
        const double f = fidelity_reward(random_test_circuit(3, 10, s), random_test_circuit(3, 10, s + 100));
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
    }
    CHECK_THROWS_AS(fidelity_reward(Circuit(2, {}), Circuit(3, {})), std::invalid_argument);
}

TEST_CASE("Problems::energy reward mappings", "[Problems]") {
    const auto h = toy(-0.5, -1.0);
    SECTION("scf-fci endpoints") {
        CHECK(energy_to_reward(-1.0, h, EnergyRewardMode::ScfFci) == Catch::Approx(1.0));
        CHECK(energy_to_reward(-0.5, h, EnergyRewardMode::ScfFci) == Catch::Approx(0.0));
        CHECK(energy_to_reward(-0.75, h, EnergyRewardMode::ScfFci) == Catch::Approx(0.5));
        CHECK(energy_to_reward(0.3, h, EnergyRewardMode::ScfFci) == 0.0);
        CHECK(energy_to_reward(-2.0, h, EnergyRewardMode::ScfFci) == 1.0);
    }
    SECTION("spectral spans the whole range") {
        // <Z> lies in [-1, 1]: E_hi = 1.
        CHECK(h.energy_upper_bound() == Catch::Approx(1.0));
        CHECK(energy_to_reward(-1.0, h) == Catch::Approx(1.0));
        CHECK(energy_to_reward(1.0, h) == Catch::Approx(0.0));
        CHECK(energy_to_reward(0.0, h) == Catch::Approx(0.5));
    }
    SECTION("monotone non-increasing in E") {
        for (auto mode : {EnergyRewardMode::Spectral, EnergyRewardMode::ScfFci}) {
            double prev = 2.0;
            for (double e = -1.5; e <= 1.5; e += 0.01) {
                const double r = energy_to_reward(e, h, mode);
                CHECK(r <= prev);
                CHECK(r >= 0.0);
                CHECK(r <= 1.0);
                prev = r;
            }
        }
    }
    SECTION("refs are required") {
        auto bare = h;
        bare.refs.reset();
        CHECK_THROWS_AS(energy_to_reward(0.0, bare), std::invalid_argument);
        CHECK_THROWS_AS(ground_state_problem("x", bare), std::invalid_argument);
    }
    SECTION("bundled H2 references") {
        const auto h2 = load_hamiltonian(kH2);
        CHECK(energy_to_reward(h2.refs->e_fci, h2) == Catch::Approx(1.0));
        CHECK(energy_to_reward(h2.refs->e_scf, h2, EnergyRewardMode::ScfFci) == Catch::Approx(0.0));
        const auto root = new_root(4);
        CHECK(energy_reward(root, h2) > 0.0);
        CHECK(energy_reward(root, h2, EnergyRewardMode::ScfFci) == 0.0);
    }
}

TEST_CASE("Problems::magic reward", "[Problems]") {
    const Circuit th(1, {GateOp::single(GateKind::H, 0), GateOp::single(GateKind::T, 0)});
    CHECK(magic_reward(th) == Catch::Approx(std::log(4.0 / 3.0) / std::log(1.5)));
    CHECK(magic_reward(th) == Catch::Approx(0.70951).margin(1e-5));
    CHECK(magic_reward(random_test_circuit(4, 20, 3, {GateKind::H, GateKind::S, GateKind::CX})) ==
          Catch::Approx(0.0).margin(1e-9));
    for (std::uint64_t s = 0; s < 30; ++s) {
        const double r = magic_reward(random_test_circuit(1 + s % 5, 20, s));
        CHECK(r >= 0.0);
        CHECK(r <= 1.0);
    }
    CHECK_THROWS_AS(make_reward(magic_max_problem(kMaxExactMagicQubits + 1)), ResourceError);
}

TEST_CASE("Problems::rewards are pure", "[Problems]") {
    const auto h2 = load_hamiltonian(kH2);
    const auto c = random_test_circuit(4, 20, 9);
    const auto p = ground_state_problem("h2", h2);
    const auto r = make_reward(p);
    CHECK(r(c) == r(c));
    CHECK(r(c) == energy_reward(c, h2));
    const auto sa = state_approx_problem("t", random_test_circuit(4, 20, 10));
    CHECK(make_reward(sa)(c) == fidelity_reward(c, *sa.target));
}

TEST_CASE("Problems::problem JSON", "[Problems]") {
    const auto p = problem_from_json(
        {{"kind", "ground-state"}, {"hamiltonian", "data/hamiltonians/H2_sto3g.json"}},
        MQAS_SOURCE_DIR);
    CHECK(p.kind == ProblemKind::GroundState);
    CHECK(p.n == 4);
    CHECK(p.energy_mode == EnergyRewardMode::Spectral);
    const auto q = problem_from_json({{"kind", "ground-state"},
                                      {"hamiltonian", kH2},
                                      {"energy_reward", "scf-fci"}});
    CHECK(q.energy_mode == EnergyRewardMode::ScfFci);
    CHECK(problem_from_json({{"kind", "magic-max"}, {"n", 3}}).n == 3);
    CHECK_THROWS_AS(problem_from_json({{"kind", "maxcut"}}), std::invalid_argument);
    CHECK_THROWS_AS(problem_from_json({{"kind", "ground-state"}, {"hamiltonian", kH2},
                                       {"energy_reward", "linear"}}),
                    std::invalid_argument);
}

TEST_CASE("Targets::small generation run", "[Problems]") {
    TargetSpec spec;
    spec.qubit_counts = {4};
    spec.runs = 3;
    spec.short_budget = 100;
    spec.long_budget = 400;
    spec.seed = 0;
    std::vector<std::string> log;
    const auto set = generate_targets(spec, [&](const std::string &m) { log.push_back(m); });
    REQUIRE(set.triples.size() == 1);
    const auto &t = set.triples[0];
    CHECK(t.working_m2 < spec.working_m2_limit);
    CHECK(t.working.size() == 20);
    double prev = -1.0;
    for (const auto &level : t.levels) {
        CHECK(level.circuit.size() == 20);
        CHECK(level.m2 > prev);
        CHECK(level.m2 == Catch::Approx(m2_exact(simulate(level.circuit)).value));
        CHECK(level.cnot_count == level.circuit.count(GateKind::CX));
        CHECK(level.t_count == level.circuit.count(GateKind::T));
        for (const auto &g : level.circuit.gates()) {
            CHECK(std::find(kCliffordTGateSet.begin(), kCliffordTGateSet.end(), g.kind) !=
                  kCliffordTGateSet.end());
        }
        prev = level.m2;
    }
    CHECK(t.attempts == log.size() + 1);

    const auto dir = std::filesystem::temp_directory_path() / "mqas_test_targets";
    std::filesystem::remove_all(dir);
    save_targets(set, dir);
    const auto manifest = read_text_file(dir / "manifest.csv");
    CHECK(manifest.rfind("n,level,m2,cnot_count,t_count\n", 0) == 0);
    CHECK(load_circuit(target_path(dir, 4, MagicLevel::High)) == t.levels[2].circuit);

    auto impossible = spec;
    impossible.working_m2_limit = -1.0;
    impossible.max_attempts = 2;
    CHECK_THROWS_AS(generate_targets(impossible), GenerationError);
}

TEST_CASE("Targets::spec JSON", "[Problems]") {
    const auto s = target_spec_from_json({{"runs", 4}, {"dist", {0, 1, 1, 0}}, {"seed", 9}});
    CHECK(s.runs == 4);
    CHECK(s.seed == 9);
    CHECK(s.dist == ActionDistribution{0, 1, 1, 0});
    CHECK_THROWS_AS(target_spec_from_json({{"budget", 4}}), std::invalid_argument);
}
