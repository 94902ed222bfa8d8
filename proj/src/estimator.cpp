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

#include "mqas/estimator.hpp"

#include <cstdio>

#include "mqas/circuit_io.hpp"
#include "mqas/hash.hpp"
#include "mqas/statevector.hpp"

namespace mqas {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<double> ExactEstimator::estimate_batch(std::span<const Circuit> cs) const {
    std::vector<double> out;
    out.reserve(cs.size());
    for (const auto &c : cs) {
        out.push_back(m2_exact(simulate(c)).value);
    }
    return out;
}

std::string SampledEstimator::describe() const {
    return "sampled(K=" + std::to_string(samples_) + ",seed=" + std::to_string(seed_) + ")";
}

std::vector<double> SampledEstimator::estimate_batch(std::span<const Circuit> cs) const {
    std::vector<double> out;
    out.reserve(cs.size());
    for (const auto &c : cs) {
        Rng rng(mix64(fnv1a64(serialize(c), seed_)));
        out.push_back(m2_sampled(simulate(c), samples_, rng).value);
    }
    return out;
}

SurrogateEstimator::SurrogateEstimator(SurrogateModel model) : model_(std::move(model)) {
    if (model_.schema_version != kFeatureSchemaVersion ||
        model_.weights.size() != feature_length()) {
        throw std::invalid_argument("surrogate model feature schema does not match");
    }
}

std::string SurrogateEstimator::describe() const {
    return "surrogate(lambda=" + std::to_string(model_.lambda) +
           ",n=" + std::to_string(model_.metadata.dataset_size) + ")";
}

std::vector<double> SurrogateEstimator::estimate_batch(std::span<const Circuit> cs) const {
    std::vector<double> out;
    out.reserve(cs.size());
    for (const auto &e : predict_batch(model_, cs)) {
        out.push_back(e.value);
    }
    return out;
}

} // namespace mqas
