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

#include "mqas/actions.hpp"

using namespace mqas;

TEST_CASE("Actions::feasibility", "[Actions]") {
    const auto root = new_root(2);
    CHECK(is_feasible(ActionClass::Add, root, 30));
    CHECK_FALSE(is_feasible(ActionClass::Add, root, 2));
    CHECK_FALSE(is_feasible(ActionClass::Swap, root, 30));
    CHECK_FALSE(is_feasible(ActionClass::Delete, root, 30));
    CHECK_FALSE(is_feasible(ActionClass::Change, root, 30));

    const auto c = root.appended(GateOp::single(GateKind::T, 0));
    CHECK(is_feasible(ActionClass::Swap, c, 30));
    CHECK(is_feasible(ActionClass::Delete, c, 30));
    CHECK_FALSE(is_feasible(ActionClass::Change, c, 30));
    CHECK(is_feasible(ActionClass::Change, c.appended(GateOp::single(GateKind::RX, 1, 0.2)), 30));
}

TEST_CASE("Actions::distribution", "[Actions]") {
    const ActionDistribution d{1, 2, 3, 4};
    const auto n = d.normalized();
    CHECK(n.p_add == Catch::Approx(0.1));
    CHECK(n.p_delete == Catch::Approx(0.4));
    CHECK_THROWS_AS((ActionDistribution{0, 0, 0, 0}.normalized()), std::invalid_argument);
    CHECK_THROWS_AS((ActionDistribution{-1, 1, 1, 1}.normalized()), std::invalid_argument);
}

TEST_CASE("Actions::apply_action respects prefix, cap and replay", "[Actions]") {
    Rng rng(11);
    MutationSettings settings;
    settings.gate_cap = 12;
    Circuit c = new_root(3);
    for (int step = 0; step < 2000; ++step) {
        auto [next, action] = apply_action(c, settings, rng);
        CHECK(next.size() <= settings.gate_cap);
        REQUIRE(next.prefix_len() == 3);
        for (std::size_t q = 0; q < 3; ++q) {
            REQUIRE(next[q] == c[q]);
        }
        REQUIRE(apply(c, action) == next);
        for (std::size_t i = next.prefix_len(); i < next.size(); ++i) {
            CHECK(std::find(settings.gate_set.begin(), settings.gate_set.end(), next[i].kind) !=
                  settings.gate_set.end());
        }
        c = next;
    }
}

TEST_CASE("Actions::swap and change keep the gate count", "[Actions]") {
    Rng rng(5);
    MutationSettings settings;
    settings.dist = {0.0, 0.4, 0.6, 0.0};
    settings.gate_set = kCliffordTGateSet;
    Circuit c = random_circuit(4, 20, kCliffordTGateSet, rng);
    std::size_t swaps = 0;
    for (int i = 0; i < 500; ++i) {
        auto [next, action] = apply_action(c, settings, rng);
        REQUIRE(next.size() == 20);
        // Clifford+T carries no angles, so Change is never feasible.
        REQUIRE(action.cls == ActionClass::Swap);
        ++swaps;
        c = next;
    }
    CHECK(swaps == 500);
}

TEST_CASE("Actions::change perturbs one angle", "[Actions]") {
    Rng rng(3);
    MutationSettings settings;
    settings.dist = {0.0, 0.0, 1.0, 0.0};
    settings.delta_theta = 0.15;
    const Circuit c(1, {GateOp::single(GateKind::RX, 0, 1.0)});
    std::vector<double> eps;
    for (int i = 0; i < 4000; ++i) {
        auto [next, action] = apply_action(c, settings, rng);
        CHECK(action.cls == ActionClass::Change);
        CHECK(next[0].angle == Catch::Approx(1.0 + action.epsilon));
        eps.push_back(action.epsilon);
    }
    double m = 0, s = 0;
    for (double e : eps) {
        m += e;
        s += e * e;
    }
    m /= eps.size();
    s = std::sqrt(s / eps.size() - m * m);
    CHECK(std::abs(m) < 0.01);
    CHECK(s == Catch::Approx(0.15).epsilon(0.05));
}

TEST_CASE("Actions::no feasible action", "[Actions]") {
    Rng rng(1);
    MutationSettings settings;
    settings.dist = {0.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_AS(apply_action(new_root(2), settings, rng), NoFeasibleAction);
}

TEST_CASE("Actions::random_circuit", "[Actions]") {
    Rng rng(2);
    const auto c = random_circuit(3, 17, kDatasetGateSet, rng);
    CHECK(c.size() == 17);
    CHECK(c.prefix_len() == 0);
    CHECK_THROWS_AS(random_circuit(1, 5, kDatasetGateSet, rng), std::invalid_argument);
    const auto one = random_circuit(1, 5, {GateKind::H, GateKind::T}, rng);
    CHECK(one.size() == 5);
}
