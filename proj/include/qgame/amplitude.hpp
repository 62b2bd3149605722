// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

#include "errors.hpp"

namespace qgame {

/// State coefficient / matrix entry. Double precision throughout.
using Amplitude = std::complex<double>;

/// Numerical thresholds shared by all engines.
///
/// eps_construct bounds the error of freshly constructed objects (roots of
/// unity, certified unitaries, normalized states). eps_crosscheck bounds the
/// disagreement between two independent computations of the same quantity.
/// eps_prune is the magnitude below which a dense-engine probability is
/// reported as an exact zero.
struct Tolerance {
    double eps_construct = 1e-12;
    double eps_crosscheck = 1e-10;
    double eps_prune = 1e-15;

    [[nodiscard]] bool valid() const noexcept {
        return eps_prune > 0.0 && eps_prune <= eps_crosscheck &&
               eps_construct > 0.0;
    }

    void validate() const {
        if (!valid()) {
            throw DomainError("Tolerance: require 0 < eps_prune <= "
                              "eps_crosscheck and 0 < eps_construct");
        }
    }
};

/// Non-negative residue of k modulo n (n > 0).
[[nodiscard]] constexpr std::int64_t mod_floor(std::int64_t k,
                                               std::int64_t n) noexcept {
    const std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

/**
 * @brief The n-th root of unity raised to the k-th power, e^{2 pi i k / n}.
 *
 * k is reduced modulo n before any trigonometry so the argument stays in
 * (-pi, pi]. Multiples of a quarter turn are returned exactly (1, i, -1, -i),
 * which keeps the two- and four-road cancellations free of rounding noise.
 *
 * @throws DomainError if n == 0.
 */
[[nodiscard]] inline Amplitude omega(std::uint64_t n, std::int64_t k) {
    if (n == 0) {
        throw DomainError("omega: n must be >= 1");
    }
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t r = mod_floor(k, nn);
    if ((4 * r) % nn == 0) {
        switch ((4 * r) / nn) {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }
    const std::int64_t centred = (2 * r > nn) ? r - nn : r;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(centred) /
                         static_cast<double>(nn);
    return {std::cos(theta), std::sin(theta)};
}

[[nodiscard]] inline Amplitude amp_add(Amplitude a, Amplitude b) noexcept {
    return a + b;
}

[[nodiscard]] inline Amplitude amp_mul(Amplitude a, Amplitude b) noexcept {
    return a * b;
}

[[nodiscard]] inline Amplitude amp_conj(Amplitude a) noexcept {
    return std::conj(a);
}

/// re^2 + im^2. Unlike std::abs this never takes a square root.
[[nodiscard]] inline double amp_norm_sq(Amplitude a) noexcept {
    return a.real() * a.real() + a.imag() * a.imag();
}

[[nodiscard]] inline bool is_finite(Amplitude a) noexcept {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

} // namespace qgame
