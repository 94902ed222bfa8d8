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

#include "mqas/evaluation.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "mqas/circuit_io.hpp"
#include "mqas/hash.hpp"
#include "mqas/stats.hpp"

namespace mqas {

std::uint64_t protocol_seed(std::uint64_t seed) {
    return mix64(seed ^ fnv1a64("estimator-evaluation-protocol"));
}

std::vector<Circuit> protocol_circuits(const EvaluationProtocol &p) {
    Rng rng(protocol_seed(p.seed));
    std::uniform_int_distribution<std::size_t> gates(p.min_gates, p.max_gates);
    std::vector<Circuit> out;
    for (std::size_t n : p.qubit_counts) {
        for (std::size_t i = 0; i < p.circuits_per_n; ++i) {
            const std::size_t g = gates(rng);
            out.push_back(random_circuit(n, g, p.gate_set, rng));
        }
    }
    return out;
}

namespace {

double rmse_of(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return a.empty() ? 0.0 : std::sqrt(s / static_cast<double>(a.size()));
}

} // namespace

EstimatorReport evaluate_estimator(const MagicEstimator &estimator,
                                   const EvaluationProtocol &protocol) {
    const auto circuits = protocol_circuits(protocol);
    EstimatorReport r;
    r.estimator = estimator.describe();
    r.count = circuits.size();
    r.predicted = estimator.estimate_batch(circuits);
    for (const auto &c : circuits) {
        r.sample_n.push_back(c.num_qubits());
        r.exact.push_back(m2_exact(simulate(c)).value);
    }
    r.rmse = rmse_of(r.exact, r.predicted);
    if (r.count >= 2) {
        const auto rho = spearman(r.exact, r.predicted);
        r.spearman = rho.rho;
        r.spearman_degenerate = rho.degenerate;
    }
    for (std::size_t n : protocol.qubit_counts) {
        std::vector<double> ex, pr;
        for (std::size_t i = 0; i < r.count; ++i) {
            if (r.sample_n[i] == n) {
                ex.push_back(r.exact[i]);
                pr.push_back(r.predicted[i]);
            }
        }
        EvaluationRow row;
        row.n = n;
        row.count = ex.size();
        row.rmse = rmse_of(ex, pr);
        if (ex.size() >= 2) {
            const auto rho = spearman(ex, pr);
            row.spearman = rho.rho;
            row.spearman_degenerate = rho.degenerate;
        }
        r.per_n.push_back(row);
    }
    return r;
}

nlohmann::json to_json(const EstimatorReport &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : r.per_n) {
        rows.push_back({{"n", row.n},
                        {"count", row.count},
                        {"rmse", row.rmse},
                        {"spearman", row.spearman},
                        {"spearman_degenerate", row.spearman_degenerate}});
    }
    return {{"estimator", r.estimator},
            {"count", r.count},
            {"rmse", r.rmse},
            {"spearman", r.spearman},
            {"spearman_degenerate", r.spearman_degenerate},
            {"per_n", rows}};
}

void save_report(const EstimatorReport &r, const std::filesystem::path &dir) {
    write_text_file(dir / "report.json", to_json(r).dump(2) + "\n");
    std::ostringstream csv;
    csv << "n,exact,predicted\n" << std::setprecision(17);
    for (std::size_t i = 0; i < r.count; ++i) {
        csv << r.sample_n[i] << ',' << r.exact[i] << ',' << r.predicted[i] << '\n';
    }
    write_text_file(dir / "predictions.csv", csv.str());
}

} // namespace mqas
