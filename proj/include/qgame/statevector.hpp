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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "amplitude.hpp"
#include "unitary_matrix.hpp"

namespace qgame {

/// Largest dense state (in amplitudes) allocated unless the caller says
/// otherwise. 8^8 fits, 9^9 does not.
inline constexpr std::uint64_t kDefaultDenseCap = 100'000'000;

/// One basis label |j_0 j_1 ... j_{P-1}>: digit t is the choice of player t.
struct OutcomeTuple {
    std::vector<std::size_t> digits;

    [[nodiscard]] std::size_t players() const noexcept { return digits.size(); }

    friend bool operator==(const OutcomeTuple &, const OutcomeTuple &) = default;
};

/// d^P, or CapacityError if it overflows 64 bits or exceeds cap.
[[nodiscard]] inline std::uint64_t dense_size(std::size_t players,
                                              std::size_t choices,
                                              std::uint64_t cap) {
    if (players == 0 || choices == 0) {
        throw DomainError("dense_size: players and choices must be >= 1");
    }
    std::uint64_t size = 1;
    for (std::size_t t = 0; t < players; ++t) {
        if (size > cap / choices) {
            throw CapacityError(
                "dense state of " + std::to_string(choices) + "^" +
                std::to_string(players) + " amplitudes exceeds the cap of " +
                std::to_string(cap) + " amplitudes");
        }
        size *= choices;
    }
    return size;
}

/// Big-endian mixed-radix index: player 0 is the most significant digit.
[[nodiscard]] inline std::uint64_t index_of(const OutcomeTuple &outcome,
                                            std::size_t d) {
    if (d == 0) {
        throw DomainError("index_of: d must be >= 1");
    }
    std::uint64_t index = 0;
    for (const std::size_t digit : outcome.digits) {
        if (digit >= d) {
            throw DomainError("index_of: digit " + std::to_string(digit) +
                              " out of range for d = " + std::to_string(d));
        }
        if (index > (std::numeric_limits<std::uint64_t>::max() - digit) / d) {
            throw CapacityError("index_of: index overflows 64 bits");
        }
        index = index * d + digit;
    }
    return index;
}

[[nodiscard]] inline OutcomeTuple outcome_of(std::uint64_t index,
                                             std::size_t players,
                                             std::size_t d) {
    const std::uint64_t size =
        dense_size(players, d, std::numeric_limits<std::uint64_t>::max());
    if (index >= size) {
        throw DomainError("outcome_of: index " + std::to_string(index) +
                          " out of range [0, " + std::to_string(size) + ")");
    }
    OutcomeTuple out{std::vector<std::size_t>(players)};
    for (std::size_t t = players; t-- > 0;) {
        out.digits[t] = static_cast<std::size_t>(index % d);
        index /= d;
    }
    return out;
}

/// Exact outcome probabilities of a state. Entries whose raw value is below
/// the pruning threshold are stored as 0 in probability; raw keeps the
/// computed value.
struct OutcomeDistribution {
    std::size_t players = 0;
    std::size_t choices = 0;
    std::vector<double> probability;
    std::vector<double> raw;

    [[nodiscard]] double total() const noexcept {
        double s = 0.0;
        for (const double p : probability) {
            s += p;
        }
        return s;
    }

    [[nodiscard]] double probability_of(const OutcomeTuple &o) const {
        return probability.at(index_of(o, choices));
    }
};

/**
 * @brief Dense state of P qudits of dimension d.
 *
 * Amplitudes are indexed by index_of(). Local gates are applied in place by
 * stride arithmetic over the d^{P-1} independent groups of the target slot,
 * so a gate costs O(d^P * d) and never materializes the full tensor-product
 * operator. Application is single-threaded and bitwise deterministic.
 */
class StateVector {
  public:
    StateVector(std::size_t players, std::size_t choices,
                std::uint64_t cap = kDefaultDenseCap)
        : players_(players), choices_(choices),
          amps_(dense_size(players, choices, cap)) {}

    /// Amplitude 1 on a single basis outcome.
    static StateVector basis_state(std::size_t players, std::size_t choices,
                                   const OutcomeTuple &outcome,
                                   std::uint64_t cap = kDefaultDenseCap) {
        if (outcome.players() != players) {
            throw DomainError("basis_state: outcome has " +
                              std::to_string(outcome.players()) +
                              " digits, expected " + std::to_string(players));
        }
        const std::uint64_t idx = index_of(outcome, choices);
        StateVector s(players, choices, cap);
        s.amps_[idx] = 1.0;
        return s;
    }

    /// Adopts an explicit amplitude array (not renormalized).
    static StateVector from_amplitudes(std::size_t players, std::size_t choices,
                                       std::vector<Amplitude> amps,
                                       std::uint64_t cap = kDefaultDenseCap) {
        StateVector s(players, choices, cap);
        if (amps.size() != s.amps_.size()) {
            throw DomainError("from_amplitudes: expected " +
                              std::to_string(s.amps_.size()) +
                              " amplitudes, got " + std::to_string(amps.size()));
        }
        s.amps_ = std::move(amps);
        return s;
    }

    [[nodiscard]] std::size_t players() const noexcept { return players_; }
    [[nodiscard]] std::size_t choices() const noexcept { return choices_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }

    [[nodiscard]] Amplitude amplitude(std::uint64_t index) const {
        return amps_.at(index);
    }

    [[nodiscard]] Amplitude amplitude(const OutcomeTuple &o) const {
        check_outcome(o);
        return amps_[index_of(o, choices_)];
    }

    void set_amplitude(const OutcomeTuple &o, Amplitude a) {
        check_outcome(o);
        amps_[index_of(o, choices_)] = a;
    }

    [[nodiscard]] double norm_sq() const noexcept {
        double s = 0.0;
        for (const auto &a : amps_) {
            s += amp_norm_sq(a);
        }
        return s;
    }

    /**
     * @brief Applies U to one player's slot, identity elsewhere.
     *
     * U must be d x d and either certified or unitary within unitarity_tol.
     */
    StateVector &apply_local_unitary(std::size_t player, const UnitaryMatrix &U,
                                     double unitarity_tol =
                                         Tolerance{}.eps_construct) {
        if (player >= players_) {
            throw DomainError("apply_local_unitary: player " +
                              std::to_string(player) + " out of range");
        }
        if (U.dim() != choices_) {
            throw DomainError("apply_local_unitary: matrix dimension " +
                              std::to_string(U.dim()) + " != d = " +
                              std::to_string(choices_));
        }
        if (!U.certified() && !(U.deviation() < unitarity_tol)) {
            throw DomainError("apply_local_unitary: matrix is not unitary");
        }

        std::size_t stride = 1;
        for (std::size_t t = player + 1; t < players_; ++t) {
            stride *= choices_;
        }
        const std::size_t block = stride * choices_;
        std::vector<Amplitude> slot(choices_);

        for (std::size_t base = 0; base < amps_.size(); base += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t first = base + inner;
                for (std::size_t j = 0; j < choices_; ++j) {
                    slot[j] = amps_[first + j * stride];
                }
                for (std::size_t i = 0; i < choices_; ++i) {
                    Amplitude acc{0.0, 0.0};
                    for (std::size_t j = 0; j < choices_; ++j) {
                        acc += U(i, j) * slot[j];
                    }
                    amps_[first + i * stride] = acc;
                }
            }
        }
        return *this;
    }

    /// U on every slot: U^{(x)P}.
    StateVector &apply_to_all_players(const UnitaryMatrix &U,
                                      double unitarity_tol =
                                          Tolerance{}.eps_construct) {
        for (std::size_t t = 0; t < players_; ++t) {
            apply_local_unitary(t, U, unitarity_tol);
        }
        return *this;
    }

    [[nodiscard]] OutcomeDistribution
    distribution(double eps_prune = Tolerance{}.eps_prune) const {
        OutcomeDistribution dist{players_, choices_,
                                 std::vector<double>(amps_.size()),
                                 std::vector<double>(amps_.size())};
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            const double p = amp_norm_sq(amps_[i]);
            dist.raw[i] = p;
            dist.probability[i] = p < eps_prune ? 0.0 : p;
        }
        return dist;
    }

  private:
    void check_outcome(const OutcomeTuple &o) const {
        if (o.players() != players_) {
            throw DomainError("outcome has " + std::to_string(o.players()) +
                              " digits, expected " + std::to_string(players_));
        }
    }

    std::size_t players_;
    std::size_t choices_;
    std::vector<Amplitude> amps_;
};

} // namespace qgame
