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

#include "mqas/finetune.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace mqas {

using nlohmann::json;

Objective energy_objective(const PauliHamiltonian &h) {
    auto hp = std::make_shared<const PauliHamiltonian>(h);
    return [hp](const Circuit &c) { return hamiltonian_expectation(simulate(c), *hp); };
}

Objective infidelity_objective(const StateVector &target) {
    auto tp = std::make_shared<const StateVector>(target);
    return [tp](const Circuit &c) { return 1.0 - fidelity(simulate(c), *tp); };
}

std::optional<Objective> problem_objective(const Problem &p) {
    switch (p.kind) {
    case ProblemKind::StateApprox:
        return infidelity_objective(simulate(*p.target));
    case ProblemKind::GroundState:
        return energy_objective(*p.hamiltonian);
    case ProblemKind::MagicMax:
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<double> objective_gradient(const Circuit &c, const Objective &f) {
    auto theta = c.angles();
    std::vector<double> grad(theta.size());
    constexpr double shift = std::numbers::pi / 2;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        const double t = theta[i];
        theta[i] = t + shift;
        const double plus = f(c.with_angles(theta));
        theta[i] = t - shift;
        const double minus = f(c.with_angles(theta));
        theta[i] = t;
        grad[i] = 0.5 * (plus - minus);
    }
    return grad;
}

std::pair<Circuit, FinetuneReport> adam_finetune(const Circuit &c, const Objective &f,
                                                 const AdamSettings &s) {
    if (!(s.lr > 0.0)) {
        throw std::invalid_argument("Adam learning rate must be positive");
    }
    FinetuneReport report;
    report.settings = s;
    std::vector<double> theta = c.angles();
    const double f0 = f(c);
    report.initial_objective = f0;
    report.trace.push_back(f0);

    double best = f0;
    std::vector<double> best_theta = theta;
    if (!theta.empty()) {
        std::vector<double> m(theta.size(), 0.0);
        std::vector<double> v(theta.size(), 0.0);
        Circuit cur = c;
        for (std::size_t t = 1; t <= s.max_steps; ++t) {
            const auto g = objective_gradient(cur, f);
            const double b1t = 1.0 - std::pow(s.beta1, static_cast<double>(t));
            const double b2t = 1.0 - std::pow(s.beta2, static_cast<double>(t));
            for (std::size_t i = 0; i < theta.size(); ++i) {
                m[i] = s.beta1 * m[i] + (1.0 - s.beta1) * g[i];
                v[i] = s.beta2 * v[i] + (1.0 - s.beta2) * g[i] * g[i];
                theta[i] -= s.lr * (m[i] / b1t) / (std::sqrt(v[i] / b2t) + s.epsilon);
            }
            cur = c.with_angles(theta);
            const double ft = f(cur);
            report.trace.push_back(ft);
            report.steps = t;
            if (ft < best) {
                best = ft;
                best_theta = theta;
            }
            if (t >= s.window &&
                std::abs(report.trace[t] - report.trace[t - s.window]) < s.tol) {
                break;
            }
        }
    }
    report.final_objective = best;
    report.final_angles = best_theta;
    return {c.with_angles(best_theta), std::move(report)};
}

json to_json(const AdamSettings &s) {
    return json{{"lr", s.lr},       {"max_steps", s.max_steps}, {"tol", s.tol},
                {"window", s.window}, {"beta1", s.beta1},       {"beta2", s.beta2},
                {"epsilon", s.epsilon}};
}

AdamSettings adam_settings_from_json(const json &j, AdamSettings base) {
    if (!j.is_object()) {
        throw std::invalid_argument("finetune settings must be a JSON object");
    }
    static const std::set<std::string> kKeys{"lr",    "max_steps", "tol",    "window",
                                             "beta1", "beta2",     "epsilon"};
    for (const auto &[key, _] : j.items()) {
        if (!kKeys.contains(key)) {
            throw std::invalid_argument("unknown finetune key '" + key + "'");
        }
    }
    try {
        base.lr = j.value("lr", base.lr);
        base.max_steps = j.value("max_steps", base.max_steps);
        base.tol = j.value("tol", base.tol);
        base.window = j.value("window", base.window);
        base.beta1 = j.value("beta1", base.beta1);
        base.beta2 = j.value("beta2", base.beta2);
        base.epsilon = j.value("epsilon", base.epsilon);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("bad finetune value: ") + e.what());
    }
    if (base.window == 0) {
        throw std::invalid_argument("finetune window must be positive");
    }
    return base;
}

json to_json(const FinetuneReport &r, bool include_trace) {
    json j{{"initial_objective", r.initial_objective},
           {"final_objective", r.final_objective},
           {"steps", r.steps},
           {"final_angles", r.final_angles},
           {"settings", to_json(r.settings)}};
    if (include_trace) {
        j["trace"] = r.trace;
    }
    return j;
}

} // namespace mqas
