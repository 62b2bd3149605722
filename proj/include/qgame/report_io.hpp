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
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "game.hpp"
#include "oracle.hpp"

namespace qgame::io {

using json = nlohmann::json;

/// 17 significant digits: enough to round-trip any double.
[[nodiscard]] inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

[[nodiscard]] inline std::string digits_str(const OutcomeTuple &o,
                                            char sep = ' ') {
    std::string s;
    for (std::size_t t = 0; t < o.digits.size(); ++t) {
        if (t) {
            s += sep;
        }
        s += std::to_string(o.digits[t]);
    }
    return s;
}

struct WriteOptions {
    bool raw = false;
};

// ---- GameReport ----------------------------------------------------------

[[nodiscard]] inline json outcome_to_json(const OutcomeRecord &r,
                                          const WriteOptions &w) {
    json j = {{"digits", r.outcome.digits},
              {"m", r.phase_sum_m},
              {"probability", r.probability},
              {"class", std::string(to_string(r.cls))},
              {"amplitude", {r.amplitude.real(), r.amplitude.imag()}}};
    if (w.raw) {
        j["raw"] = r.raw_probability;
    }
    return j;
}

[[nodiscard]] inline json to_json(const GameReport &rep,
                                  const WriteOptions &w = {}) {
    json j;
    j["config"] = {{"n", rep.config.n}, {"p", rep.config.p}};
    j["engine"] = std::string(to_string(rep.engine));
    j["quantum"] = {{"p_worst", rep.p_worst_quantum},
                    {"p_best", rep.p_best_quantum}};
    j["classical"] = {{"p_worst", rep.p_worst_classical},
                      {"p_best", rep.p_best_classical}};
    j["best_ratio"] = rep.best_ratio;
    if (rep.max_discrepancy) {
        j["max_discrepancy"] = *rep.max_discrepancy;
    }
    j["outcomes_truncated"] = rep.outcomes_truncated;
    if (!rep.outcomes_truncated) {
        json arr = json::array();
        for (const auto &r : rep.per_outcome) {
            arr.push_back(outcome_to_json(r, w));
        }
        j["outcomes"] = std::move(arr);
    }
    return j;
}

/// Inverse of to_json. Occupancy and class are recomputed from the digits;
/// a stored class that disagrees is rejected.
[[nodiscard]] inline GameReport report_from_json(const json &j) {
    GameReport rep;
    rep.config = GameConfig::make(j.at("config").at("n").get<std::int64_t>(),
                                  j.at("config").at("p").get<std::int64_t>());
    rep.engine = engine_from(j.at("engine").get<std::string>());
    rep.p_worst_quantum = j.at("quantum").at("p_worst").get<double>();
    rep.p_best_quantum = j.at("quantum").at("p_best").get<double>();
    rep.p_worst_classical = j.at("classical").at("p_worst").get<double>();
    rep.p_best_classical = j.at("classical").at("p_best").get<double>();
    rep.best_ratio = j.at("best_ratio").get<double>();
    if (j.contains("max_discrepancy")) {
        rep.max_discrepancy = j.at("max_discrepancy").get<double>();
    }
    rep.outcomes_truncated = j.value("outcomes_truncated", false);
    if (j.contains("outcomes")) {
        for (const auto &o : j.at("outcomes")) {
            OutcomeRecord r;
            r.outcome.digits = o.at("digits").get<std::vector<std::size_t>>();
            r.phase_sum_m = o.at("m").get<std::int64_t>();
            r.probability = o.at("probability").get<double>();
            r.raw_probability = o.value("raw", r.probability);
            const auto &a = o.at("amplitude");
            r.amplitude = {a.at(0).get<double>(), a.at(1).get<double>()};
            r.occupancy = occupancy(r.outcome, rep.config.n);
            r.cls = classify(r.occupancy);
            if (r.cls != outcome_class_from(o.at("class").get<std::string>())) {
                throw DomainError("report_from_json: class does not match "
                                  "the outcome digits");
            }
            rep.per_outcome.push_back(std::move(r));
        }
    }
    return rep;
}

/// Fixed CSV column order for per-outcome tables.
inline constexpr const char *kOutcomeCsvHeader =
    "index,digits,m,probability,class,amplitude_re,amplitude_im";

inline void write_csv(std::ostream &os, const GameReport &rep,
                      const WriteOptions &w = {}) {
    os << kOutcomeCsvHeader << (w.raw ? ",raw" : "") << '\n';
    for (const auto &r : rep.per_outcome) {
        os << index_of(r.outcome, rep.config.n) << ',' << digits_str(r.outcome)
           << ',' << r.phase_sum_m << ',' << fmt17(r.probability) << ','
           << to_string(r.cls) << ',' << fmt17(r.amplitude.real()) << ','
           << fmt17(r.amplitude.imag());
        if (w.raw) {
            os << ',' << fmt17(r.raw_probability);
        }
        os << '\n';
    }
}

inline void write_text(std::ostream &os, const GameReport &rep,
                       const WriteOptions &w = {}) {
    os << "trucker game n=" << rep.config.n << " p=" << rep.config.p
       << " engine=" << to_string(rep.engine) << '\n';
    os << "  quantum   P_worst = " << fmt17(rep.p_worst_quantum)
       << "  P_best = " << fmt17(rep.p_best_quantum) << '\n';
    os << "  classical P_worst = " << fmt17(rep.p_worst_classical)
       << "  P_best = " << fmt17(rep.p_best_classical) << '\n';
    os << "  best ratio (quantum / classical) = " << fmt17(rep.best_ratio)
       << '\n';
    if (rep.max_discrepancy) {
        os << "  max |dense - closed form| = " << fmt17(*rep.max_discrepancy)
           << '\n';
    }
    if (rep.outcomes_truncated) {
        os << "  (outcome list omitted; pass --full to list)\n";
        return;
    }
    os << "  nonzero outcomes:\n";
    for (const auto &r : rep.per_outcome) {
        if (r.probability == 0.0 && !w.raw) {
            continue;
        }
        os << "    |" << digits_str(r.outcome, ',') << ">  m=" << r.phase_sum_m
           << "  P=" << fmt17(r.probability) << "  " << to_string(r.cls);
        if (w.raw) {
            os << "  raw=" << fmt17(r.raw_probability);
        }
        os << '\n';
    }
}

// ---- sweep ----------------------------------------------------------------

[[nodiscard]] inline json sweep_to_json(std::size_t n,
                                        const std::vector<SweepRow> &rows) {
    json arr = json::array();
    for (const auto &r : rows) {
        arr.push_back({{"p", r.p},
                       {"p_worst_quantum", r.p_worst_quantum},
                       {"p_best_quantum", r.p_best_quantum},
                       {"p_worst_classical", r.p_worst_classical},
                       {"p_best_classical", r.p_best_classical},
                       {"best_ratio", r.best_ratio}});
    }
    return {{"n", n}, {"rows", std::move(arr)}};
}

inline constexpr const char *kSweepCsvHeader =
    "p,p_worst_quantum,p_best_quantum,p_worst_classical,p_best_classical,"
    "best_ratio";

inline void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
    os << kSweepCsvHeader << '\n';
    for (const auto &r : rows) {
        os << r.p << ',' << fmt17(r.p_worst_quantum) << ','
           << fmt17(r.p_best_quantum) << ',' << fmt17(r.p_worst_classical)
           << ',' << fmt17(r.p_best_classical) << ',' << fmt17(r.best_ratio)
           << '\n';
    }
}

inline void write_sweep_text(std::ostream &os, std::size_t n,
                             const std::vector<SweepRow> &rows) {
    os << "phase sweep n=" << n << '\n';
    os << "  p  P_worst(Q)               P_best(Q)                ratio\n";
    for (const auto &r : rows) {
        os << "  " << r.p << "  " << fmt17(r.p_worst_quantum) << "  "
           << fmt17(r.p_best_quantum) << "  " << fmt17(r.best_ratio) << '\n';
    }
    if (!rows.empty()) {
        os << "  classical P_worst = " << fmt17(rows.front().p_worst_classical)
           << "  P_best = " << fmt17(rows.front().p_best_classical) << '\n';
    }
}

// ---- classical Monte Carlo -------------------------------------------------

struct ClassicalLine {
    std::string event;
    std::uint64_t count = 0;
    double empirical = 0.0;
    double analytic = 0.0;
    double abs_deviation = 0.0;
    double sigma = 0.0;
};

/// Empirical vs analytic rows, sigma = sqrt(q (1 - q) / trials).
[[nodiscard]] inline std::vector<ClassicalLine>
classical_lines(const oracle::MonteCarloResult &mc) {
    auto line = [&](const char *event, std::uint64_t count, double emp,
                    double q) {
        const double sigma =
            std::sqrt(q * (1.0 - q) / static_cast<double>(mc.trials));
        return ClassicalLine{event, count, emp, q, std::abs(emp - q), sigma};
    };
    return {line("worst", mc.worst_count, mc.empirical_worst,
                 classical_worst_probability(mc.n)),
            line("best", mc.best_count, mc.empirical_best,
                 classical_best_probability(mc.n))};
}

[[nodiscard]] inline json classical_to_json(const oracle::MonteCarloResult &mc) {
    json j = {{"n", mc.n},
              {"trials", mc.trials},
              {"seed", mc.seed},
              {"generator", mc.generator}};
    for (const auto &l : classical_lines(mc)) {
        j[l.event] = {{"count", l.count},
                      {"empirical", l.empirical},
                      {"analytic", l.analytic},
                      {"abs_deviation", l.abs_deviation},
                      {"sigma", l.sigma}};
    }
    return j;
}

inline constexpr const char *kClassicalCsvHeader =
    "n,trials,seed,generator,event,count,empirical,analytic,abs_deviation,sigma";

inline void write_classical_csv(std::ostream &os,
                                const oracle::MonteCarloResult &mc) {
    os << kClassicalCsvHeader << '\n';
    for (const auto &l : classical_lines(mc)) {
        os << mc.n << ',' << mc.trials << ',' << mc.seed << ',' << mc.generator
           << ',' << l.event << ',' << l.count << ',' << fmt17(l.empirical)
           << ',' << fmt17(l.analytic) << ',' << fmt17(l.abs_deviation) << ','
           << fmt17(l.sigma) << '\n';
    }
}

inline void write_classical_text(std::ostream &os,
                                 const oracle::MonteCarloResult &mc) {
    os << "classical game n=" << mc.n << " trials=" << mc.trials
       << " seed=" << mc.seed << " (" << mc.generator << ")\n";
    for (const auto &l : classical_lines(mc)) {
        const double z = l.sigma > 0.0 ? l.abs_deviation / l.sigma : 0.0;
        os << "  " << l.event << ": count=" << l.count
           << " empirical=" << fmt17(l.empirical)
           << " analytic=" << fmt17(l.analytic)
           << " |dev|=" << fmt17(l.abs_deviation)
           << " sigma=" << fmt17(l.sigma) << " (" << fmt17(z) << " sigma)\n";
    }
}

} // namespace qgame::io
