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

#include "mqas/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Dense>

#include "mqas/circuit_io.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

using nlohmann::json;

LabeledDataset generate_dataset(const DatasetSpec &spec) {
    if (spec.min_qubits == 0 || spec.min_qubits > spec.max_qubits ||
        spec.min_gates > spec.max_gates) {
        throw std::invalid_argument("dataset spec has an empty range");
    }
    if (spec.max_qubits > kMaxExactMagicQubits) {
        throw std::invalid_argument("dataset qubit range exceeds the exact-M2 cap");
    }
    Rng rng(spec.seed);
    std::uniform_int_distribution<std::size_t> qubits(spec.min_qubits, spec.max_qubits);
    std::uniform_int_distribution<std::size_t> gates(spec.min_gates, spec.max_gates);
    LabeledDataset ds;
    ds.spec = spec;
    ds.items.reserve(spec.size);
    for (std::size_t i = 0; i < spec.size; ++i) {
        const std::size_t n = qubits(rng);
        const std::size_t g = gates(rng);
        Circuit c = random_circuit(n, g, spec.gate_set, rng);
        const double label = m2_exact(simulate(c)).value;
        ds.items.push_back({std::move(c), label});
    }
    return ds;
}

void save_dataset(const LabeledDataset &ds, const std::filesystem::path &path) {
    std::ostringstream out;
    for (const auto &item : ds.items) {
        out << json{{"circuit", to_json(item.circuit)}, {"m2", item.m2}}.dump() << '\n';
    }
    write_text_file(path, out.str());
}

LabeledDataset load_dataset(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    LabeledDataset ds;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        try {
            const json j = json::parse(line);
            ds.items.push_back({circuit_from_json(j.at("circuit")), j.at("m2").get<double>()});
        } catch (const std::exception &e) {
            throw ParseError(path.string() + ":" + std::to_string(lineno) + ": " + e.what(), 0,
                             "line " + std::to_string(lineno));
        }
    }
    ds.spec.size = ds.items.size();
    if (!ds.items.empty()) {
        std::size_t lo_q = SIZE_MAX, hi_q = 0, lo_g = SIZE_MAX, hi_g = 0;
        for (const auto &it : ds.items) {
            lo_q = std::min(lo_q, it.circuit.num_qubits());
            hi_q = std::max(hi_q, it.circuit.num_qubits());
            lo_g = std::min(lo_g, it.circuit.size());
            hi_g = std::max(hi_g, it.circuit.size());
        }
        ds.spec.min_qubits = lo_q;
        ds.spec.max_qubits = hi_q;
        ds.spec.min_gates = lo_g;
        ds.spec.max_gates = hi_g;
    }
    return ds;
}

SurrogateModel fit_ridge(const std::vector<FeatureVector> &rows, std::span<const double> labels,
                         double lambda) {
    if (rows.empty() || rows.size() != labels.size()) {
        throw std::invalid_argument("ridge fit needs one label per non-empty row");
    }
    if (!(lambda > 0)) {
        throw std::invalid_argument("ridge lambda must be positive");
    }
    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto d = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd x(m, d);
    Eigen::VectorXd y(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != d) {
            throw std::invalid_argument("ragged design matrix");
        }
        x.row(i) = Eigen::Map<const Eigen::VectorXd>(rows[i].data(), d);
        y(i) = labels[i];
    }
    const Eigen::RowVectorXd mu = x.colwise().mean();
    const double y_mean = y.mean();
    x.rowwise() -= mu;
    y.array() -= y_mean;
    // Constant columns get unit scale and end up with zero weight.
    Eigen::RowVectorXd scale = (x.colwise().squaredNorm() / static_cast<double>(m)).cwiseSqrt();
    for (Eigen::Index k = 0; k < d; ++k) {
        if (!(scale(k) > 1e-12)) {
            scale(k) = 1.0;
        }
    }
    x.array().rowwise() /= scale.array();

    Eigen::MatrixXd gram = x.transpose() * x;
    gram.diagonal().array() += lambda * static_cast<double>(m);
    const Eigen::VectorXd rhs = x.transpose() * y;
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        throw NumericError("ridge normal matrix is not positive definite");
    }
    const Eigen::VectorXd w_std = ldlt.solve(rhs);
    if (!w_std.allFinite()) {
        throw NumericError("ridge solve produced non-finite weights");
    }

    SurrogateModel model;
    model.lambda = lambda;
    model.weights.resize(static_cast<std::size_t>(d));
    double bias = y_mean;
    for (Eigen::Index k = 0; k < d; ++k) {
        const double w = w_std(k) / scale(k);
        model.weights[static_cast<std::size_t>(k)] = w;
        bias -= w * mu(k);
    }
    model.bias = bias;
    return model;
}

SurrogateModel train_surrogate(const LabeledDataset &ds, double lambda) {
    if (ds.items.empty()) {
        throw std::invalid_argument("cannot train on an empty dataset");
    }
    std::vector<FeatureVector> rows;
    std::vector<double> labels;
    rows.reserve(ds.items.size());
    labels.reserve(ds.items.size());
    for (const auto &it : ds.items) {
        rows.push_back(features(it.circuit));
        labels.push_back(it.m2);
    }
    SurrogateModel m = fit_ridge(rows, labels, lambda);
    m.metadata = {ds.items.size(), ds.spec.min_qubits, ds.spec.max_qubits, ds.spec.min_gates,
                  ds.spec.max_gates};
    return m;
}

double linear_response(const SurrogateModel &m, const FeatureVector &f) {
    if (m.weights.size() != f.size()) {
        throw std::invalid_argument("model has " + std::to_string(m.weights.size()) +
                                    " weights but features have length " +
                                    std::to_string(f.size()));
    }
    double v = m.bias;
    for (std::size_t k = 0; k < f.size(); ++k) {
        v += m.weights[k] * f[k];
    }
    return v;
}

MagicEstimate predict(const SurrogateModel &m, const Circuit &c) {
    if (m.schema_version != kFeatureSchemaVersion || m.weights.size() != feature_length()) {
        throw std::invalid_argument("surrogate model feature schema does not match");
    }
    const double raw = linear_response(m, features(c));
    return {std::clamp(raw, 0.0, m2_max(c.num_qubits())), MagicMethod::Surrogate, false};
}

std::vector<MagicEstimate> predict_batch(const SurrogateModel &m,
                                         std::span<const Circuit> circuits) {
    std::vector<MagicEstimate> out;
    out.reserve(circuits.size());
    for (const auto &c : circuits) {
        out.push_back(predict(m, c));
    }
    return out;
}

json to_json(const SurrogateModel &m) {
    json names = json::array();
    for (auto n : feature_names()) {
        names.push_back(std::string(n));
    }
    return json{{"schema_version", m.schema_version},
                {"weights", m.weights},
                {"bias", m.bias},
                {"lambda", m.lambda},
                {"metadata",
                 {{"dataset_size", m.metadata.dataset_size},
                  {"qubit_range", {m.metadata.min_qubits, m.metadata.max_qubits}},
                  {"gate_range", {m.metadata.min_gates, m.metadata.max_gates}},
                  {"feature_names", names}}}};
}

SurrogateModel surrogate_from_json(const json &j) {
    SurrogateModel m;
    try {
        m.schema_version = j.at("schema_version").get<int>();
        m.weights = j.at("weights").get<std::vector<double>>();
        m.bias = j.at("bias").get<double>();
        m.lambda = j.at("lambda").get<double>();
        if (j.contains("metadata")) {
            const auto &md = j["metadata"];
            m.metadata.dataset_size = md.value("dataset_size", std::size_t{0});
            if (md.contains("qubit_range")) {
                m.metadata.min_qubits = md["qubit_range"][0].get<std::size_t>();
                m.metadata.max_qubits = md["qubit_range"][1].get<std::size_t>();
            }
            if (md.contains("gate_range")) {
                m.metadata.min_gates = md["gate_range"][0].get<std::size_t>();
                m.metadata.max_gates = md["gate_range"][1].get<std::size_t>();
            }
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed surrogate model: ") + e.what(), 0, "model");
    }
    return m;
}

void save_surrogate(const SurrogateModel &m, const std::filesystem::path &path) {
    write_text_file(path, to_json(m).dump(2) + "\n");
}

SurrogateModel load_surrogate(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    try {
        return surrogate_from_json(json::parse(text));
    } catch (const json::parse_error &e) {
        throw ParseError(path.string() + ": " + line_column(text, e.byte) + ": " + e.what(), e.byte,
                         "text");
    }
}

} // namespace mqas
