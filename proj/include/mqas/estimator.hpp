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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mqas/circuit.hpp"
#include "mqas/magic.hpp"
#include "mqas/surrogate.hpp"

namespace mqas {

/**
 * Source of M2 estimates for the search. Implementations must be reentrant
 * and deterministic: the same circuit always gets the same estimate, and
 * batch results come back in input order.
 */
class MagicEstimator {
  public:
    virtual ~MagicEstimator() = default;

    [[nodiscard]] virtual MagicMethod method() const noexcept = 0;
    [[nodiscard]] virtual std::string describe() const = 0;
    [[nodiscard]] virtual std::vector<double> estimate_batch(std::span<const Circuit> cs) const = 0;

    [[nodiscard]] double estimate(const Circuit &c) const {
        return estimate_batch(std::span<const Circuit>(&c, 1)).front();
    }
};

class ExactEstimator final : public MagicEstimator {
  public:
    [[nodiscard]] MagicMethod method() const noexcept override { return MagicMethod::Exact; }
    [[nodiscard]] std::string describe() const override { return "exact"; }
    [[nodiscard]] std::vector<double> estimate_batch(std::span<const Circuit> cs) const override;
};

/// Pauli-sampling estimator; each circuit's sample stream is seeded from the
/// base seed and the circuit text, so estimates do not depend on call order.
class SampledEstimator final : public MagicEstimator {
  public:
    SampledEstimator(std::size_t samples, std::uint64_t seed) : samples_(samples), seed_(seed) {}

    [[nodiscard]] MagicMethod method() const noexcept override { return MagicMethod::Sampled; }
    [[nodiscard]] std::string describe() const override;
    [[nodiscard]] std::vector<double> estimate_batch(std::span<const Circuit> cs) const override;

  private:
    std::size_t samples_;
    std::uint64_t seed_;
};

class SurrogateEstimator final : public MagicEstimator {
  public:
    explicit SurrogateEstimator(SurrogateModel model);

    [[nodiscard]] MagicMethod method() const noexcept override { return MagicMethod::Surrogate; }
    [[nodiscard]] std::string describe() const override;
    [[nodiscard]] std::vector<double> estimate_batch(std::span<const Circuit> cs) const override;
    [[nodiscard]] const SurrogateModel &model() const noexcept { return model_; }

  private:
    SurrogateModel model_;
};

} // namespace mqas
