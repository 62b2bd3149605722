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
#include <cstdio>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "game.hpp"
#include "gates.hpp"
#include "oracle.hpp"

namespace qgame {

namespace detail {
inline std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}
} // namespace detail

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyOptions {
    std::size_t n_max = 5;
    /// Largest n^n for which dense and per-outcome checks are run.
    std::uint64_t enumeration_cap = 1'000'000;
    std::uint64_t dense_cap = kDefaultDenseCap;
    Tolerance tol{};
    /// Strategy used by the dense engine. Replaceable so a deliberately
    /// broken matrix can serve as a negative control.
    std::function<UnitaryMatrix(std::size_t)> strategy = strategy_unitary;
};

[[nodiscard]] inline bool all_passed(const std::vector<CheckResult> &checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed || c.skipped; });
}

/**
 * @brief Runs the invariant suites for n = 2 .. n_max.
 *
 * Per n: unitarity of the strategy matrix, dense normalization, the
 * selection rule with its n^{1-n} magnitude, dense vs closed form vs
 * brute force, worst-outcome cancellation at p = 1, best-outcome
 * amplification, and the exhaustive classical baseline. Checks whose
 * enumeration would exceed enumeration_cap are reported as skipped.
 */
[[nodiscard]] inline std::vector<CheckResult>
run_verification(const VerifyOptions &opt) {
    if (opt.n_max < 2 || opt.n_max > kMaxGameN) {
        throw DomainError("verify: n-max must be in [2, " +
                          std::to_string(kMaxGameN) + "], got " +
                          std::to_string(opt.n_max));
    }
    const Tolerance &tol = opt.tol;
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, false, std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) {
        out.push_back({std::move(name), false, true, std::move(why)});
    };

    for (std::size_t n = 2; n <= opt.n_max; ++n) {
        const std::string tag = " n=" + std::to_string(n);
        const auto nn = static_cast<std::int64_t>(n);

        UnitaryMatrix U = opt.strategy(n);
        const double dev = U.deviation();
        add("unitarity" + tag, dev < tol.eps_construct,
            "max|U^dag U - I| = " + detail::short_num(dev));

        const bool identity_ok =
            quantum_best_ratio(n) == classical_best_ratio(n).scaled(n);
        add("best-amplification-identity" + tag, identity_ok,
            quantum_best_ratio(n).str() + " = " + std::to_string(n) + " x " +
                classical_best_ratio(n).str());

        const auto sweep = sweep_phase(n);
        bool sweep_ok = true;
        for (const auto &row : sweep) {
            sweep_ok = sweep_ok && ((row.p_worst_quantum > 0.0) == (row.p == 0));
            sweep_ok = sweep_ok &&
                       ((row.p_best_quantum > 0.0) == (row.p == best_phase(n)));
        }
        add("sweep-phase-structure" + tag, sweep_ok,
            "worst only at p=0, best only at p=" + std::to_string(best_phase(n)));

        Ratio::Int count = checked_pow(n, static_cast<unsigned>(n));
        if (count > opt.enumeration_cap) {
            skip("dense-and-oracle" + tag,
                 Ratio::to_string(count) + " outcomes exceed enumeration cap");
            continue;
        }

        if (count <= oracle::kExhaustiveCap) {
            const auto ex = oracle::exhaustive_classical(n);
            add("classical-exhaustive" + tag,
                ex.worst() == classical_worst_ratio(n) &&
                    ex.best() == classical_best_ratio(n),
                ex.worst().str() + ", " + ex.best().str());
        }

        if (!U.certified() && !(dev < tol.eps_construct)) {
            skip("dense-engine" + tag, "strategy matrix is not unitary");
            continue;
        }
        U.certify(tol.eps_construct);

        double max_norm_err = 0.0;
        double max_dense_closed = 0.0;
        double max_closed_brute = 0.0;
        double max_closed_sum_err = 0.0;
        bool rule_ok = true;
        double worst_p1 = -1.0;
        double best_at_phase = -1.0;
        const double magnitude = std::pow(static_cast<double>(n), 1.0 - static_cast<double>(n));

        for (std::int64_t p = 0; p < nn; ++p) {
            const GameConfig cfg = GameConfig::make(nn, p, tol, opt.dense_cap);
            const GameReport dense = run_dense(cfg, U, ReportOptions{true});
            double total = 0.0;
            double closed_total = 0.0;
            for (const auto &r : dense.per_outcome) {
                total += r.raw_probability;
                const bool allowed = selection_rule(n, p, r.outcome);
                if (allowed) {
                    rule_ok = rule_ok &&
                              std::abs(r.probability - magnitude) < tol.eps_construct;
                } else {
                    rule_ok = rule_ok && r.raw_probability < tol.eps_prune;
                }
                const OutcomeRecord closed = closed_form_amplitude(cfg, r.outcome);
                closed_total += closed.probability;
                max_dense_closed = std::max(
                    max_dense_closed, std::abs(r.raw_probability - closed.probability));
                if (n <= oracle::kBruteForceMaxN) {
                    const double brute =
                        amp_norm_sq(oracle::brute_force_amplitude(n, p, r.outcome));
                    max_closed_brute = std::max(
                        max_closed_brute, std::abs(brute - closed.probability));
                }
            }
            max_norm_err = std::max(max_norm_err, std::abs(total - 1.0));
            max_closed_sum_err =
                std::max(max_closed_sum_err, std::abs(closed_total - 1.0));
            if (p == 1) {
                worst_p1 = dense.p_worst_quantum;
            }
            if (p == best_phase(n)) {
                best_at_phase = dense.p_best_quantum;
            }
        }

        add("normalization" + tag,
            max_norm_err < tol.eps_crosscheck &&
                max_closed_sum_err < tol.eps_crosscheck,
            "dense " + detail::short_num(max_norm_err) + ", closed form " +
                detail::short_num(max_closed_sum_err));
        add("selection-rule" + tag, rule_ok,
            "nonzero iff sum(j)+p = 0 mod n, magnitude n^(1-n)");
        add("dense-vs-closed-form" + tag, max_dense_closed < tol.eps_crosscheck,
            "max diff " + detail::short_num(max_dense_closed));
        if (n <= oracle::kBruteForceMaxN) {
            add("closed-form-vs-brute-force" + tag,
                max_closed_brute < tol.eps_crosscheck,
                "max diff " + detail::short_num(max_closed_brute));
        }
        add("worst-cancelled-at-p1" + tag, worst_p1 == 0.0,
            "P_worst(p=1) = " + detail::short_num(worst_p1));
        const double expect_best = quantum_best_probability(n);
        add("best-amplified" + tag,
            std::abs(best_at_phase - expect_best) < tol.eps_crosscheck,
            "P_best(p=" + std::to_string(best_phase(n)) +
                ") = " + detail::short_num(best_at_phase));
    }
    return out;
}

} // namespace qgame
