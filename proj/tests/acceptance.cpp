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
// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qgame/cli.hpp"
#include "qgame/qgame.hpp"

using namespace qgame;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

bool all_same(const OutcomeTuple &o) {
    for (const auto d : o.digits) {
        if (d != o.digits.front()) {
            return false;
        }
    }
    return true;
}

// 1. Two-trucker game.
Outcome two_truckers() {
    Outcome r;
    const auto cfg = GameConfig::make(2, 1);
    const auto t0 = Clock::now();
    const auto rep = run_dense(cfg);
    const double elapsed = seconds_since(t0);
    const double expect[4] = {0.0, 0.5, 0.5, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        r.require(std::abs(rep.per_outcome[i].probability - expect[i]) < 1e-12,
                  "P(" + io::digits_str(rep.per_outcome[i].outcome, ',') +
                      ") = " + num(rep.per_outcome[i].probability));
    }
    r.require(rep.p_worst_quantum == 0.0, "P_worst != 0");
    r.require(elapsed < 1e-3, "runtime " + num(elapsed) + " s");
    if (r.pass) {
        r.detail = "{(0,1): 0.5, (1,0): 0.5}, P_worst = 0, " +
                   num(elapsed * 1e6) + " us";
    }
    return r;
}

// 2. Worst-outcome cancellation at p = 1.
Outcome worst_cancellation() {
    Outcome r;
    const auto t0 = Clock::now();
    double worst_seen = 0.0;
    for (std::int64_t n = 2; n <= 6; ++n) {
        const auto rep = run_dense(GameConfig::make(n, 1), ReportOptions{true});
        std::size_t count = 0;
        for (const auto &rec : rep.per_outcome) {
            if (all_same(rec.outcome)) {
                ++count;
                worst_seen = std::max(worst_seen, rec.raw_probability);
                r.require(rec.raw_probability < 1e-15,
                          "n=" + std::to_string(n) + " raw P = " +
                              num(rec.raw_probability));
            }
        }
        r.require(count == static_cast<std::size_t>(n), "missing all-same outcomes");
    }
    const double elapsed = seconds_since(t0);
    r.require(elapsed < 10.0, "runtime " + num(elapsed) + " s");
    if (r.pass) {
        r.detail = "max raw P(all same) = " + num(worst_seen) + ", " +
                   num(elapsed) + " s";
    }
    return r;
}

// 3. Best-outcome amplification.
Outcome best_amplification() {
    Outcome r;
    std::string values;
    for (std::size_t n = 2; n <= 6; ++n) {
        const std::int64_t p = best_phase(n);
        const auto cfg = GameConfig::make(static_cast<std::int64_t>(n), p);
        const auto dense = run_dense(cfg);
        const Ratio exact = quantum_best_ratio(n);
        r.require(std::abs(dense.p_best_quantum - exact.to_double()) < 1e-10,
                  "n=" + std::to_string(n) + " dense P_best = " +
                      num(dense.p_best_quantum));
        r.require(quantum_best_ratio(n, p) == classical_best_ratio(n).scaled(n),
                  "n=" + std::to_string(n) + " closed form != n x classical");
        const auto closed = run_closed_form(cfg);
        r.require(closed.p_best_quantum == exact.to_double(),
                  "n=" + std::to_string(n) + " closed-form report value");
        values += (values.empty() ? "" : ", ") + std::to_string(n) + "->" +
                  num(dense.p_best_quantum);
    }
    if (r.pass) {
        r.detail = values;
    }
    return r;
}

// 4. Dense vs closed form vs brute force.
Outcome oracle_equivalence() {
    Outcome r;
    const auto t0 = Clock::now();
    double dc = 0.0, cb = 0.0;
    for (std::size_t n = 2; n <= 5; ++n) {
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(n); ++p) {
            const auto cfg = GameConfig::make(static_cast<std::int64_t>(n), p);
            const auto dense = run_dense(cfg, ReportOptions{true});
            for (const auto &rec : dense.per_outcome) {
                const auto closed = closed_form_amplitude(cfg, rec.outcome);
                dc = std::max(dc, std::abs(rec.raw_probability - closed.probability));
                const double brute =
                    amp_norm_sq(oracle::brute_force_amplitude(n, p, rec.outcome));
                cb = std::max(cb, std::abs(brute - closed.probability));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    r.require(dc < 1e-10, "dense vs closed " + num(dc));
    r.require(cb < 1e-10, "closed vs brute " + num(cb));
    r.require(elapsed < 60.0, "runtime " + num(elapsed) + " s");
    if (r.pass) {
        r.detail = "max |dense-closed| = " + num(dc) + ", max |closed-brute| = " +
                   num(cb) + ", " + num(elapsed) + " s";
    }
    return r;
}

// 5. Selection rule: every probability is 0 or n^{1-n}.
Outcome selection_rule_dichotomy() {
    Outcome r;
    double worst_norm = 0.0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const double mag = std::pow(static_cast<double>(n), 1.0 - static_cast<double>(n));
        for (std::int64_t p = 0; p < static_cast<std::int64_t>(n); ++p) {
            const auto cfg = GameConfig::make(static_cast<std::int64_t>(n), p);
            for (const auto &rep : {run_dense(cfg, ReportOptions{true}),
                                    run_closed_form(cfg, ReportOptions{true})}) {
                double total = 0.0;
                bool ok = true;
                for (const auto &rec : rep.per_outcome) {
                    total += rec.probability;
                    const bool zero = rec.raw_probability < 1e-15;
                    const bool full = std::abs(rec.probability - mag) < 1e-12;
                    ok = ok && (zero || full) &&
                         (!zero == selection_rule(n, p, rec.outcome));
                }
                r.require(ok, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                  " " + std::string(to_string(rep.engine)));
                worst_norm = std::max(worst_norm, std::abs(total - 1.0));
                r.require(std::abs(total - 1.0) < 1e-10,
                          "normalization n=" + std::to_string(n));
            }
        }
    }
    if (r.pass) {
        r.detail = "both engines, n<=6, all p; max |sum-1| = " + num(worst_norm);
    }
    return r;
}

// 6. Unitarity of the strategy matrix.
Outcome unitarity() {
    Outcome r;
    double worst = 0.0;
    for (std::size_t n = 1; n <= 16; ++n) {
        auto U = strategy_unitary(n);
        const double dev = verify_unitary(U, 1e-12);
        worst = std::max(worst, dev);
        r.require(dev < 1e-12, "n=" + std::to_string(n) + " dev " + num(dev));
    }
    if (r.pass) {
        r.detail = "max deviation n<=16: " + num(worst);
    }
    return r;
}

// 7. Classical baselines.
Outcome classical_baselines() {
    Outcome r;
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto ex = oracle::exhaustive_classical(n);
        r.require(ex.worst() == Ratio(n, checked_pow(n, static_cast<unsigned>(n))),
                  "exhaustive worst n=" + std::to_string(n));
        r.require(ex.best() == Ratio(checked_factorial(static_cast<unsigned>(n)),
                                     checked_pow(n, static_cast<unsigned>(n))),
                  "exhaustive best n=" + std::to_string(n));
    }
    std::string z;
    const std::uint64_t trials = 1'000'000;
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::uint64_t seed = 20'000 + n;
        const auto mc = oracle::classical_monte_carlo(n, trials, seed);
        const auto again = oracle::classical_monte_carlo(n, trials, seed);
        r.require(mc.worst_count == again.worst_count &&
                      mc.best_count == again.best_count,
                  "non-deterministic n=" + std::to_string(n));
        for (const auto &line : io::classical_lines(mc)) {
            const double zz = line.abs_deviation / line.sigma;
            r.require(zz < 5.0, line.event + " n=" + std::to_string(n) + " at " +
                                    num(zz) + " sigma");
            z += (z.empty() ? "" : " ") + num(zz);
        }
    }
    if (r.pass) {
        r.detail = "exhaustive exact n<=7; MC |z| = " + z;
    }
    return r;
}

// 8. Closed-form sweep at n = 20 through the CLI.
Outcome sweep_twenty() {
    Outcome r;
    std::ostringstream out, err;
    const auto t0 = Clock::now();
    const int code = cli::run({"sweep", "--n", "20"}, out, err);
    const double elapsed = seconds_since(t0);
    r.require(code == 0, "exit code " + std::to_string(code));
    r.require(elapsed < 1.0, "runtime " + num(elapsed) + " s");
    if (code != 0) {
        return r;
    }
    const auto j = io::json::parse(out.str());
    const double expect = quantum_best_ratio(20).to_double();
    double best10 = 0.0;
    for (const auto &row : j.at("rows")) {
        const auto p = row.at("p").get<std::int64_t>();
        const double w = row.at("p_worst_quantum").get<double>();
        const double b = row.at("p_best_quantum").get<double>();
        r.require((w > 0.0) == (p == 0), "worst row p=" + std::to_string(p));
        r.require((b > 0.0) == (p == 10), "best row p=" + std::to_string(p));
        if (p == 10) {
            best10 = b;
        }
    }
    r.require(std::abs(best10 - expect) <= 1e-12 * expect,
              "P_best(p=10) = " + num(best10));
    if (r.pass) {
        r.detail = "P_best(p=10) = 20*20!/20^20 = " + num(best10) + ", " +
                   num(elapsed * 1e3) + " ms";
    }
    return r;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 two-trucker reproduction", two_truckers},
        {"2 worst-outcome cancellation (p=1)", worst_cancellation},
        {"3 best-outcome amplification", best_amplification},
        {"4 oracle equivalence", oracle_equivalence},
        {"5 selection-rule dichotomy", selection_rule_dichotomy},
        {"6 strategy unitarity", unitarity},
        {"7 classical baselines", classical_baselines},
        {"8 closed-form sweep n=20", sweep_twenty},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
