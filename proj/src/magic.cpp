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

#include "mqas/magic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iostream>
#include <mutex>
#include <string>
#include <vector>

#include "mqas/pauli.hpp"

namespace mqas {

std::string_view method_name(MagicMethod m) noexcept {
    switch (m) {
    case MagicMethod::Exact:
        return "exact";
    case MagicMethod::Sampled:
        return "sampled";
    case MagicMethod::Surrogate:
        return "surrogate";
    }
    return "?";
}

double m2_max(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("m2_max: n must be >= 1");
    }
    return std::log((std::exp2(static_cast<double>(n)) + 1.0) / 2.0);
}

namespace {

void walsh_hadamard(std::vector<Complex> &v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Complex a = v[j];
                const Complex b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

// <P>^4 for a Pauli in symplectic form, directly from the amplitudes.
double fourth_power_expectation(const StateVector &s, std::uint64_t x, std::uint64_t z) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Complex term = std::conj(s[i ^ x]) * s[i];
        acc += (std::popcount(i & z) & 1) ? -term : term;
    }
    // phase i^{|x&z|} has unit modulus
    const double m2 = std::norm(acc);
    return m2 * m2;
}

} // namespace

MagicEstimate m2_exact(const StateVector &s) {
    const std::size_t n = s.num_qubits();
    if (n > kMaxExactMagicQubits) {
        throw ResourceError("exact M2 refused for " + std::to_string(n) + " qubits (cap " +
                            std::to_string(kMaxExactMagicQubits) + ")");
    }
    if (n > kExactMagicWarnQubits) {
        static std::once_flag warned;
        std::call_once(warned, [n] {
            std::cerr << "warning: exact M2 on " << n << " qubits enumerates 4^" << n
                      << " Pauli strings\n";
        });
    }
    const std::size_t dim = s.dim();
    std::vector<Complex> w(dim);
    double total = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t i = 0; i < dim; ++i) {
            w[i] = std::conj(s[i ^ x]) * s[i];
        }
        walsh_hadamard(w);
        for (const auto &e : w) {
            const double m2 = std::norm(e);
            total += m2 * m2;
        }
    }
    const double value = -std::log(total / static_cast<double>(dim));
    return {std::max(0.0, value), MagicMethod::Exact, false};
}

MagicEstimate m2_sampled(const StateVector &s, std::size_t samples, Rng &rng,
                         PauliSampling mode) {
    const std::size_t n = s.num_qubits();
    if (n > 31) {
        throw ResourceError("sampled M2 supports at most 31 qubits");
    }
    const double log_dim = static_cast<double>(n) * std::log(2.0);
    double sum = 0.0;
    std::size_t count = 0;
    if (mode == PauliSampling::Exhaustive) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t x = 0; x < dim; ++x) {
            for (std::uint64_t z = 0; z < dim; ++z) {
                sum += fourth_power_expectation(s, x, z);
            }
        }
        count = dim * dim;
    } else {
        if (samples == 0) {
            throw std::invalid_argument("m2_sampled: need at least one sample");
        }
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (std::size_t k = 0; k < samples; ++k) {
            const std::uint64_t x = rng() & mask;
            const std::uint64_t z = rng() & mask;
            sum += fourth_power_expectation(s, x, z);
        }
        count = samples;
    }
    const double bound = m2_max(n);
    const double mean = sum / static_cast<double>(count);
    if (!(mean > 0.0)) {
        return {bound, MagicMethod::Sampled, true};
    }
    const double value = -std::log(mean) - log_dim;
    return {std::clamp(value, 0.0, bound), MagicMethod::Sampled, false};
}

} // namespace mqas
