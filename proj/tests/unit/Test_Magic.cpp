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

#include <cmath>

#include "TestHelpers.hpp"
#include "mqas/estimator.hpp"
#include "mqas/magic.hpp"

using namespace mqas;
using namespace mqas::test;

namespace {

Circuit t_plus(std::size_t k) {
    std::vector<GateOp> gates;
    for (std::uint32_t q = 0; q < k; ++q) {
        gates.push_back(GateOp::single(GateKind::H, q));
        gates.push_back(GateOp::single(GateKind::T, q));
    }
    return Circuit(k, gates);
}

} // namespace

TEST_CASE("Magic::m2_max", "[Magic]") {
    CHECK(m2_max(1) == Catch::Approx(std::log(1.5)));
    CHECK(m2_max(4) == Catch::Approx(std::log(17.0 / 2.0)));
    CHECK_THROWS_AS(m2_max(0), std::invalid_argument);
}

TEST_CASE("Magic::fast kernel matches brute-force enumeration", "[Magic]") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 1 + seed % 4;
        const auto c = random_test_circuit(n, 3 + seed % 20, seed,
                                           {GateKind::CX, GateKind::H, GateKind::S, GateKind::T,
                                            GateKind::RX, GateKind::RY, GateKind::RZ});
        CAPTURE(seed, n);
        CHECK(m2_exact(simulate(c)).value == Catch::Approx(brute_force_m2(c)).margin(1e-10));
    }
}

TEST_CASE("Magic::closed forms", "[Magic]") {
    CHECK(m2_exact(StateVector(3)).value == Catch::Approx(0.0).margin(1e-12));
    CHECK(m2_exact(simulate(t_plus(1))).value == Catch::Approx(std::log(4.0 / 3.0)).margin(1e-12));
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(m2_exact(simulate(t_plus(k))).value ==
              Catch::Approx(k * std::log(4.0 / 3.0)).margin(1e-10));
    }
}

TEST_CASE("Magic::Clifford circuits are free", "[Magic]") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = random_test_circuit(1 + seed % 5, 1 + seed % 30, seed,
                                           {GateKind::H, GateKind::S, GateKind::CX});
        CHECK(m2_exact(simulate(c)).value == Catch::Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("Magic::exact cap", "[Magic]") {
    CHECK_THROWS_AS(m2_exact(StateVector(kMaxExactMagicQubits + 1)), ResourceError);
}

TEST_CASE("Magic::sampled estimator", "[Magic]") {
    const auto c = random_test_circuit(3, 25, 4);
    const auto s = simulate(c);
    const double exact = m2_exact(s).value;
    Rng rng(1);

    SECTION("exhaustive mode reproduces the exact value") {
        const auto e = m2_sampled(s, 1, rng, PauliSampling::Exhaustive);
        CHECK(e.value == Catch::Approx(exact).margin(1e-10));
        CHECK(e.method == MagicMethod::Sampled);
    }
    SECTION("converges with more samples") {
        const auto e = m2_sampled(s, 200000, rng);
        CHECK(std::abs(e.value - exact) < 0.05);
        CHECK(e.value >= 0.0);
        CHECK(e.value <= m2_max(3));
    }
    SECTION("zero samples rejected") {
        CHECK_THROWS_AS(m2_sampled(s, 0, rng), std::invalid_argument);
    }
}

TEST_CASE("Magic::sampled degenerate case", "[Magic]") {
    // |0> has <P> = 0 for every P containing X or Y; drawing only those can
    // leave W = 0, which pins the estimate to m2_max with a flag.
    const auto s = simulate(t_plus(4));
    bool saw_degenerate = false;
    for (std::uint64_t seed = 0; seed < 200 && !saw_degenerate; ++seed) {
        Rng rng(seed);
        const auto e = m2_sampled(StateVector(4), 1, rng);
        if (e.degenerate) {
            saw_degenerate = true;
            CHECK(e.value == Catch::Approx(m2_max(4)));
        }
    }
    CHECK(saw_degenerate);
    Rng rng(0);
    CHECK_FALSE(m2_sampled(s, 1000, rng).degenerate);
}

TEST_CASE("Magic::estimators are order independent", "[Magic]") {
    std::vector<Circuit> cs;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        cs.push_back(random_test_circuit(3, 12, seed));
    }
    const SampledEstimator est(500, 9);
    const auto forward = est.estimate_batch(cs);
    std::vector<Circuit> reversed(cs.rbegin(), cs.rend());
    const auto backward = est.estimate_batch(reversed);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        CHECK(forward[i] == backward[cs.size() - 1 - i]);
        CHECK(est.estimate(cs[i]) == forward[i]);
    }
    const ExactEstimator exact;
    CHECK(exact.estimate(t_plus(2)) == Catch::Approx(2 * std::log(4.0 / 3.0)));
}
