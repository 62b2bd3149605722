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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "amplitude.hpp"
#include "ratio.hpp"
#include "statevector.hpp"

// Independent reference computations. Nothing in this header uses the game
// engines or UnitaryMatrix; matrix entries are rebuilt from omega().

namespace qgame::oracle {

inline constexpr std::size_t kBruteForceMaxN = 8;
inline constexpr std::uint64_t kExhaustiveCap = 100'000'000;

/**
 * @brief Final amplitude of one outcome by the literal k-sum
 * (1/sqrt n) sum_k omega(n, k p) u_{k j_0} ... u_{k j_{n-1}},
 * with u_{kj} = omega(n, k j) / sqrt n, multiplied out term by term.
 */
[[nodiscard]] inline Amplitude brute_force_amplitude(std::size_t n,
                                                     std::int64_t p,
                                                     const OutcomeTuple &outcome) {
    if (n < 1 || n > kBruteForceMaxN) {
        throw DomainError("brute_force_amplitude: n must be in [1, " +
                          std::to_string(kBruteForceMaxN) + "]");
    }
    if (outcome.players() != n) {
        throw DomainError("brute_force_amplitude: outcome must have n digits");
    }
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
    Amplitude total{};
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        Amplitude term = omega(n, kk * p) * inv_sqrt;
        for (const std::size_t j : outcome.digits) {
            if (j >= n) {
                throw DomainError("brute_force_amplitude: digit out of range");
            }
            const Amplitude u =
                omega(n, kk * static_cast<std::int64_t>(j)) * inv_sqrt;
            term *= u;
        }
        total += term;
    }
    return total;
}

/// Unbiased integer in [0, bound) by widening multiply with rejection.
template <class Rng>
[[nodiscard]] std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    static_assert(Rng::min() == 0 && Rng::max() == ~std::uint64_t{0},
                  "needs a full 64-bit generator");
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

struct MonteCarloResult {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    std::uint64_t worst_count = 0;
    std::uint64_t best_count = 0;
    double empirical_worst = 0.0;
    double empirical_best = 0.0;
};

/**
 * @brief Classical game: every trucker picks a road uniformly and
 * independently. Counts all-same and all-distinct trials.
 *
 * Single stream of std::mt19937_64 seeded with seed; identical output for
 * identical arguments on every platform.
 */
[[nodiscard]] inline MonteCarloResult
classical_monte_carlo(std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("classical_monte_carlo: n must be >= 1");
    }
    if (trials < 1) {
        throw DomainError("classical_monte_carlo: trials must be >= 1");
    }
    std::mt19937_64 rng(seed);
    MonteCarloResult res;
    res.n = n;
    res.trials = trials;
    res.seed = seed;

    std::vector<std::size_t> occ(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::fill(occ.begin(), occ.end(), 0);
        std::size_t distinct = 0;
        for (std::size_t player = 0; player < n; ++player) {
            const auto road = static_cast<std::size_t>(uniform_below(rng, n));
            if (occ[road]++ == 0) {
                ++distinct;
            }
        }
        if (distinct == 1) {
            ++res.worst_count;
        }
        // n == 1 is both worst and best; count it once.
        if (distinct == n && n > 1) {
            ++res.best_count;
        }
    }
    res.empirical_worst = static_cast<double>(res.worst_count) /
                          static_cast<double>(trials);
    res.empirical_best = static_cast<double>(res.best_count) /
                         static_cast<double>(trials);
    return res;
}

struct ExhaustiveResult {
    std::uint64_t total = 0;
    std::uint64_t worst_count = 0;
    std::uint64_t best_count = 0;

    [[nodiscard]] Ratio worst() const { return Ratio(worst_count, total); }
    [[nodiscard]] Ratio best() const { return Ratio(best_count, total); }
    [[nodiscard]] double worst_probability() const {
        return static_cast<double>(worst_count) / static_cast<double>(total);
    }
    [[nodiscard]] double best_probability() const {
        return static_cast<double>(best_count) / static_cast<double>(total);
    }
};

/// Counts all-same and all-distinct tuples among all n^n equally likely
/// classical outcomes.
[[nodiscard]] inline ExhaustiveResult exhaustive_classical(std::size_t n) {
    if (n < 2) {
        throw DomainError("exhaustive_classical: n must be >= 2");
    }
    ExhaustiveResult res;
    res.total = dense_size(n, n, kExhaustiveCap);
    std::vector<std::size_t> digits(n, 0);
    std::vector<std::size_t> occ(n);
    for (std::uint64_t i = 0; i < res.total; ++i) {
        std::fill(occ.begin(), occ.end(), 0);
        std::size_t distinct = 0;
        for (const std::size_t d : digits) {
            if (occ[d]++ == 0) {
                ++distinct;
            }
        }
        res.worst_count += distinct == 1;
        res.best_count += distinct == n;
        for (std::size_t t = n; t-- > 0;) {
            if (++digits[t] < n) {
                break;
            }
            digits[t] = 0;
        }
    }
    return res;
}

} // namespace qgame::oracle
