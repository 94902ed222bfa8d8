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

#include <span>
#include <vector>

namespace mqas {

/// 1-based ranks; tied values share the average of their positions.
[[nodiscard]] std::vector<double> average_ranks(std::span<const double> xs);

struct Correlation {
    double rho{0.0};
    /// One of the inputs was constant; rho is reported as 0.
    bool degenerate{false};
};

[[nodiscard]] Correlation pearson(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation of average ranks. Throws std::invalid_argument for
/// mismatched lengths or fewer than two samples.
[[nodiscard]] Correlation spearman(std::span<const double> xs, std::span<const double> ys);

[[nodiscard]] double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for a single value.
[[nodiscard]] double sample_std(std::span<const double> xs);
/// Linear-interpolation quantile between order statistics (q in [0, 1]).
[[nodiscard]] double quantile(std::span<const double> xs, double q);
[[nodiscard]] double median(std::span<const double> xs);

/// P(X >= successes) for X ~ Binomial(trials, 1/2): the one-sided sign-test
/// p-value.
[[nodiscard]] double sign_test_p_value(std::size_t successes, std::size_t trials);

} // namespace mqas
