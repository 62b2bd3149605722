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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amplitude.hpp"
#include "gates.hpp"
#include "ratio.hpp"
#include "statevector.hpp"

namespace qgame {

/// Largest number of truckers accepted. Exact probabilities use n^n, which
/// must fit the 128-bit Ratio; the closed form itself has no other limit.
inline constexpr std::size_t kMaxGameN = 20;

/// Reports list individual outcomes up to this many unless asked for all.
inline constexpr std::uint64_t kDefaultOutcomeLimit = 100'000;

/// Hard ceiling on closed-form enumeration even when every outcome is asked
/// for.
inline constexpr std::uint64_t kFullEnumerationCap = 20'000'000;

enum class OutcomeClass { Worst, Best, Intermediate };

[[nodiscard]] inline std::string_view to_string(OutcomeClass c) noexcept {
    switch (c) {
    case OutcomeClass::Worst:
        return "worst";
    case OutcomeClass::Best:
        return "best";
    default:
        return "intermediate";
    }
}

[[nodiscard]] inline OutcomeClass outcome_class_from(std::string_view s) {
    if (s == "worst") {
        return OutcomeClass::Worst;
    }
    if (s == "best") {
        return OutcomeClass::Best;
    }
    if (s == "intermediate") {
        return OutcomeClass::Intermediate;
    }
    throw DomainError("unknown outcome class '" + std::string(s) + "'");
}

enum class Engine { Dense, ClosedForm, Both };

[[nodiscard]] inline std::string_view to_string(Engine e) noexcept {
    switch (e) {
    case Engine::Dense:
        return "dense";
    case Engine::ClosedForm:
        return "closed-form";
    default:
        return "both";
    }
}

[[nodiscard]] inline Engine engine_from(std::string_view s) {
    if (s == "dense") {
        return Engine::Dense;
    }
    if (s == "closed-form") {
        return Engine::ClosedForm;
    }
    if (s == "both") {
        return Engine::Both;
    }
    throw DomainError("unknown engine '" + std::string(s) + "'");
}

/**
 * @brief One game instance: n truckers, n roads, phase parameter p.
 *
 * p is accepted as any integer and stored reduced into [0, n); only p mod n
 * affects the outcome amplitudes.
 */
struct GameConfig {
    std::size_t n = 2;
    std::int64_t p = 1;
    Tolerance tol{};
    std::uint64_t dense_cap = kDefaultDenseCap;

    static GameConfig make(std::int64_t n, std::int64_t p, Tolerance tol = {},
                           std::uint64_t dense_cap = kDefaultDenseCap) {
        if (n < 2) {
            throw DomainError("game requires n >= 2 (got " + std::to_string(n) +
                              ")");
        }
        if (n > static_cast<std::int64_t>(kMaxGameN)) {
            throw DomainError("game supports n <= " + std::to_string(kMaxGameN) +
                              " (got " + std::to_string(n) + ")");
        }
        tol.validate();
        return GameConfig{static_cast<std::size_t>(n), mod_floor(p, n), tol,
                          dense_cap};
    }

    friend bool operator==(const GameConfig &a, const GameConfig &b) noexcept {
        return a.n == b.n && a.p == b.p;
    }
};

struct OutcomeRecord {
    OutcomeTuple outcome;
    std::int64_t phase_sum_m = 0;
    Amplitude amplitude{};
    double probability = 0.0;
    /// Unpruned |amplitude|^2; differs from probability only for
    /// dense-engine entries below eps_prune.
    double raw_probability = 0.0;
    std::vector<std::size_t> occupancy;
    OutcomeClass cls = OutcomeClass::Intermediate;
};

struct GameReport {
    GameConfig config;
    Engine engine = Engine::ClosedForm;
    double p_worst_quantum = 0.0;
    double p_best_quantum = 0.0;
    double p_worst_classical = 0.0;
    double p_best_classical = 0.0;
    double best_ratio = 0.0;
    std::vector<OutcomeRecord> per_outcome;
    bool outcomes_truncated = false;
    /// Max |dense - closed-form| outcome probability; only for Engine::Both.
    std::optional<double> max_discrepancy;
};

struct ReportOptions {
    bool full = false;
    std::uint64_t outcome_limit = kDefaultOutcomeLimit;
};

/// Trucks per road.
[[nodiscard]] inline std::vector<std::size_t>
occupancy(const OutcomeTuple &outcome, std::size_t roads) {
    std::vector<std::size_t> occ(roads, 0);
    for (const std::size_t d : outcome.digits) {
        if (d >= roads) {
            throw DomainError("occupancy: road " + std::to_string(d) +
                              " out of range");
        }
        ++occ[d];
    }
    return occ;
}

/// Worst iff one road carries everybody, Best iff every road carries one.
[[nodiscard]] inline OutcomeClass
classify(const std::vector<std::size_t> &occ) noexcept {
    std::size_t total = 0;
    bool all_one = true;
    for (const std::size_t c : occ) {
        total += c;
        all_one = all_one && c == 1;
    }
    for (const std::size_t c : occ) {
        if (c == total && total > 0) {
            return OutcomeClass::Worst;
        }
    }
    return all_one ? OutcomeClass::Best : OutcomeClass::Intermediate;
}

/// m = j_0 + ... + j_{n-1} + p.
[[nodiscard]] inline std::int64_t phase_sum(const OutcomeTuple &outcome,
                                            std::int64_t p) noexcept {
    std::int64_t m = p;
    for (const std::size_t d : outcome.digits) {
        m += static_cast<std::int64_t>(d);
    }
    return m;
}

/// An outcome has nonzero amplitude iff (sum of digits + p) = 0 (mod n).
[[nodiscard]] inline bool selection_rule(std::size_t n, std::int64_t p,
                                         const OutcomeTuple &outcome) noexcept {
    return mod_floor(phase_sum(outcome, p), static_cast<std::int64_t>(n)) == 0;
}

// Exact classical and quantum reference probabilities.

/// n / n^n: all truckers independently uniform, all on one road.
[[nodiscard]] inline Ratio classical_worst_ratio(std::size_t n) {
    return Ratio(n, checked_pow(n, static_cast<unsigned>(n)));
}

/// n! / n^n: all truckers on distinct roads.
[[nodiscard]] inline Ratio classical_best_ratio(std::size_t n) {
    return Ratio(checked_factorial(static_cast<unsigned>(n)),
                 checked_pow(n, static_cast<unsigned>(n)));
}

/// n * n! / n^n, attained at p = n(n-1)/2 (mod n).
[[nodiscard]] inline Ratio quantum_best_ratio(std::size_t n) {
    return Ratio(checked_factorial(static_cast<unsigned>(n)) * n,
                 checked_pow(n, static_cast<unsigned>(n)));
}

inline void require_game_n(std::size_t n, const char *what) {
    if (n < 2 || n > kMaxGameN) {
        throw DomainError(std::string(what) + ": n must be in [2, " +
                          std::to_string(kMaxGameN) + "], got " +
                          std::to_string(n));
    }
}

[[nodiscard]] inline double classical_worst_probability(std::size_t n) {
    require_game_n(n, "classical_worst_probability");
    return classical_worst_ratio(n).to_double();
}

[[nodiscard]] inline double classical_best_probability(std::size_t n) {
    require_game_n(n, "classical_best_probability");
    return classical_best_ratio(n).to_double();
}

[[nodiscard]] inline double quantum_best_probability(std::size_t n) {
    require_game_n(n, "quantum_best_probability");
    return quantum_best_ratio(n).to_double();
}

/// The phase that maximizes the best-outcome probability, n(n-1)/2 mod n.
[[nodiscard]] inline std::int64_t best_phase(std::size_t n) noexcept {
    const auto nn = static_cast<std::int64_t>(n);
    return mod_floor(nn * (nn - 1) / 2, nn);
}

/// Total quantum probability of the n all-same outcomes at phase p. Each
/// has m = j n + p, so they pass the selection rule together iff p = 0.
[[nodiscard]] inline Ratio quantum_worst_ratio(std::size_t n, std::int64_t p) {
    const auto nn = static_cast<std::int64_t>(n);
    if (mod_floor(p, nn) != 0) {
        return Ratio(0, 1);
    }
    return Ratio(n * n, checked_pow(n, static_cast<unsigned>(n)));
}

/// Total quantum probability of the n! permutation outcomes at phase p.
/// Every permutation has digit sum n(n-1)/2.
[[nodiscard]] inline Ratio quantum_best_ratio(std::size_t n, std::int64_t p) {
    const auto nn = static_cast<std::int64_t>(n);
    if (mod_floor(nn * (nn - 1) / 2 + p, nn) != 0) {
        return Ratio(0, 1);
    }
    return quantum_best_ratio(n);
}

// Game engines.

[[nodiscard]] inline StateVector build_initial_state(const GameConfig &cfg) {
    return prepare_initial_state(cfg.n, cfg.p, cfg.dense_cap);
}

namespace detail {

inline OutcomeRecord make_record(const GameConfig &cfg, OutcomeTuple outcome,
                                 Amplitude amplitude, double raw,
                                 double probability) {
    OutcomeRecord r;
    r.phase_sum_m = phase_sum(outcome, cfg.p);
    r.occupancy = occupancy(outcome, cfg.n);
    r.cls = classify(r.occupancy);
    r.outcome = std::move(outcome);
    r.amplitude = amplitude;
    r.raw_probability = raw;
    r.probability = probability;
    return r;
}

inline void fill_classical(GameReport &rep) {
    rep.p_worst_classical = classical_worst_probability(rep.config.n);
    rep.p_best_classical = classical_best_probability(rep.config.n);
    rep.best_ratio = rep.p_best_quantum / rep.p_best_classical;
}

/// Advances digits as a big-endian odometer; false after the last tuple.
inline bool next_outcome(OutcomeTuple &o, std::size_t d) noexcept {
    for (std::size_t t = o.digits.size(); t-- > 0;) {
        if (++o.digits[t] < d) {
            return true;
        }
        o.digits[t] = 0;
    }
    return false;
}

} // namespace detail

/**
 * @brief Closed-form amplitude of one outcome.
 *
 * The final amplitude is (1/sqrt n)^{n+1} sum_k omega(n, k m) with
 * m = sum of digits + p. The geometric sum is n when m = 0 (mod n) and
 * exactly 0 otherwise, so no sum is evaluated here.
 */
[[nodiscard]] inline OutcomeRecord
closed_form_amplitude(const GameConfig &cfg, const OutcomeTuple &outcome) {
    if (outcome.players() != cfg.n) {
        throw DomainError("closed_form_amplitude: outcome has " +
                          std::to_string(outcome.players()) +
                          " digits, expected " + std::to_string(cfg.n));
    }
    const auto nd = static_cast<double>(cfg.n);
    Amplitude amp{};
    if (selection_rule(cfg.n, cfg.p, outcome)) {
        amp = nd * std::pow(nd, -0.5 * (nd + 1.0));
    }
    const double prob = amp_norm_sq(amp);
    return detail::make_record(cfg, outcome, amp, prob, prob);
}

/// Runs the game on a dense state with a caller-supplied strategy matrix.
[[nodiscard]] inline GameReport run_dense(const GameConfig &cfg,
                                          const UnitaryMatrix &strategy,
                                          const ReportOptions &opts = {}) {
    StateVector state = build_initial_state(cfg);
    state.apply_to_all_players(strategy, cfg.tol.eps_construct);
    const OutcomeDistribution dist = state.distribution(cfg.tol.eps_prune);

    GameReport rep;
    rep.config = cfg;
    rep.engine = Engine::Dense;
    const bool keep = opts.full || state.size() <= opts.outcome_limit;
    rep.outcomes_truncated = !keep;
    if (keep) {
        rep.per_outcome.reserve(state.size());
    }

    OutcomeTuple o{std::vector<std::size_t>(cfg.n, 0)};
    std::uint64_t idx = 0;
    do {
        const double prob = dist.probability[idx];
        const OutcomeClass cls = classify(occupancy(o, cfg.n));
        if (cls == OutcomeClass::Worst) {
            rep.p_worst_quantum += prob;
        } else if (cls == OutcomeClass::Best) {
            rep.p_best_quantum += prob;
        }
        if (keep) {
            rep.per_outcome.push_back(detail::make_record(
                cfg, o, state.amplitude(idx), dist.raw[idx], prob));
        }
        ++idx;
    } while (detail::next_outcome(o, cfg.n));

    detail::fill_classical(rep);
    return rep;
}

/// Dense engine: initial state, strategy_unitary(n) on every player, exact
/// outcome distribution.
[[nodiscard]] inline GameReport run_dense(const GameConfig &cfg,
                                          const ReportOptions &opts = {}) {
    return run_dense(cfg, strategy_unitary(cfg.n), opts);
}

/**
 * @brief Closed-form engine. Aggregates come from exact counting, so this
 * works for every n up to kMaxGameN; outcomes are enumerated only when the
 * list would be reported.
 */
[[nodiscard]] inline GameReport run_closed_form(const GameConfig &cfg,
                                                const ReportOptions &opts = {}) {
    GameReport rep;
    rep.config = cfg;
    rep.engine = Engine::ClosedForm;
    rep.p_worst_quantum = quantum_worst_ratio(cfg.n, cfg.p).to_double();
    rep.p_best_quantum = quantum_best_ratio(cfg.n, cfg.p).to_double();
    detail::fill_classical(rep);

    const Ratio::Int count = checked_pow(cfg.n, static_cast<unsigned>(cfg.n));
    const std::uint64_t limit =
        opts.full ? kFullEnumerationCap : opts.outcome_limit;
    if (count > limit) {
        if (opts.full) {
            throw CapacityError("closed form: listing " + Ratio::to_string(count) +
                                " outcomes exceeds the cap of " +
                                std::to_string(kFullEnumerationCap));
        }
        rep.outcomes_truncated = true;
        return rep;
    }
    rep.per_outcome.reserve(static_cast<std::size_t>(count));
    OutcomeTuple o{std::vector<std::size_t>(cfg.n, 0)};
    do {
        rep.per_outcome.push_back(closed_form_amplitude(cfg, o));
    } while (detail::next_outcome(o, cfg.n));
    return rep;
}

/**
 * @brief Dense engine cross-checked against the closed form.
 *
 * Returns the dense report with max_discrepancy set to the largest
 * |dense raw - closed-form| outcome probability.
 */
[[nodiscard]] inline GameReport run_both(const GameConfig &cfg,
                                         const ReportOptions &opts = {}) {
    GameReport rep = run_dense(cfg, ReportOptions{true, opts.outcome_limit});
    double worst = 0.0;
    for (const auto &r : rep.per_outcome) {
        const double closed = closed_form_amplitude(cfg, r.outcome).probability;
        worst = std::max(worst, std::abs(r.raw_probability - closed));
    }
    rep.engine = Engine::Both;
    rep.max_discrepancy = worst;
    if (!opts.full && rep.per_outcome.size() > opts.outcome_limit) {
        rep.per_outcome.clear();
        rep.outcomes_truncated = true;
    }
    return rep;
}

[[nodiscard]] inline GameReport run(const GameConfig &cfg, Engine engine,
                                    const ReportOptions &opts = {}) {
    switch (engine) {
    case Engine::Dense:
        return run_dense(cfg, opts);
    case Engine::ClosedForm:
        return run_closed_form(cfg, opts);
    default:
        return run_both(cfg, opts);
    }
}

struct SweepRow {
    std::int64_t p = 0;
    double p_worst_quantum = 0.0;
    double p_best_quantum = 0.0;
    double p_worst_classical = 0.0;
    double p_best_classical = 0.0;
    double best_ratio = 0.0;
};

/// Worst/best probabilities for every p in [0, n), closed form only.
[[nodiscard]] inline std::vector<SweepRow> sweep_phase(std::size_t n) {
    require_game_n(n, "sweep_phase");
    const double cw = classical_worst_probability(n);
    const double cb = classical_best_probability(n);
    std::vector<SweepRow> rows;
    rows.reserve(n);
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(n); ++p) {
        SweepRow row;
        row.p = p;
        row.p_worst_quantum = quantum_worst_ratio(n, p).to_double();
        row.p_best_quantum = quantum_best_ratio(n, p).to_double();
        row.p_worst_classical = cw;
        row.p_best_classical = cb;
        row.best_ratio = row.p_best_quantum / cb;
        rows.push_back(row);
    }
    return rows;
}

/// Payoff of a trucker as a function of how many trucks share its road.
using PayoffFunction = std::function<double(std::size_t occupancy)>;

[[nodiscard]] inline double inverse_occupancy_payoff(std::size_t c) noexcept {
    return 1.0 / static_cast<double>(c);
}

/// Per-trucker payoffs of an outcome. The default 1/c is a placeholder
/// congestion payoff; classification never depends on it.
[[nodiscard]] inline std::vector<double>
congestion_payoffs(const OutcomeTuple &outcome, std::size_t roads,
                   const PayoffFunction &payoff = inverse_occupancy_payoff) {
    const auto occ = occupancy(outcome, roads);
    std::vector<double> out;
    out.reserve(outcome.players());
    for (const std::size_t d : outcome.digits) {
        out.push_back(payoff(occ[d]));
    }
    return out;
}

} // namespace qgame
