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

#include <cstdint>
#include <map>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "game.hpp"
#include "oracle.hpp"
#include "report_io.hpp"
#include "verify.hpp"

namespace qgame::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kCrossCheckFailed = 2,
    kCapacity = 3,
    kUsage = 4,
};

enum class Format { Json, Csv, Text };

/// Dense cap from QGAME_DENSE_CAP, else the library default.
[[nodiscard]] inline std::uint64_t dense_cap_from_env() {
    const char *v = std::getenv("QGAME_DENSE_CAP");
    if (v == nullptr || *v == '\0') {
        return kDefaultDenseCap;
    }
    char *end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || cap == 0) {
        throw DomainError(std::string("QGAME_DENSE_CAP must be a positive "
                                      "integer, got '") + v + "'");
    }
    return cap;
}

struct RunRequest {
    std::string command;
    std::int64_t n = 0;
    std::int64_t p = 1;
    std::string engine = "closed-form";
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    Format format = Format::Json;
    std::string output_path;
    bool full = false;
    bool raw = false;
    std::int64_t n_max = 5;
    bool negate_strategy_phase = false;
};

namespace detail {

inline int emit(const RunRequest &req, const std::string &text,
                std::ostream &out, std::ostream &err) {
    if (req.output_path.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream f(req.output_path, std::ios::binary);
    if (!f) {
        err << "error: cannot open " << req.output_path << " for writing\n";
        return kUsage;
    }
    f << text;
    return kOk;
}

inline int cmd_simulate(const RunRequest &req, std::ostream &out,
                        std::ostream &err) {
    const GameConfig cfg =
        GameConfig::make(req.n, req.p, Tolerance{}, dense_cap_from_env());
    const GameReport rep =
        run(cfg, engine_from(req.engine), ReportOptions{req.full});
    const io::WriteOptions w{req.raw};
    std::ostringstream os;
    switch (req.format) {
    case Format::Json:
        os << io::to_json(rep, w).dump(2) << '\n';
        break;
    case Format::Csv:
        io::write_csv(os, rep, w);
        break;
    case Format::Text:
        io::write_text(os, rep, w);
        break;
    }
    const int rc = emit(req, os.str(), out, err);
    if (rc != kOk) {
        return rc;
    }
    if (rep.max_discrepancy && !(*rep.max_discrepancy < cfg.tol.eps_crosscheck)) {
        err << "error: dense and closed-form engines disagree by "
            << io::fmt17(*rep.max_discrepancy) << '\n';
        return kCrossCheckFailed;
    }
    return kOk;
}

inline int cmd_sweep(const RunRequest &req, std::ostream &out,
                     std::ostream &err) {
    if (req.n < 2 || req.n > static_cast<std::int64_t>(kMaxGameN)) {
        throw DomainError("sweep: n must be in [2, " + std::to_string(kMaxGameN) +
                          "]");
    }
    const auto n = static_cast<std::size_t>(req.n);
    const auto rows = sweep_phase(n);
    std::ostringstream os;
    switch (req.format) {
    case Format::Json:
        os << io::sweep_to_json(n, rows).dump(2) << '\n';
        break;
    case Format::Csv:
        io::write_sweep_csv(os, rows);
        break;
    case Format::Text:
        io::write_sweep_text(os, n, rows);
        break;
    }
    return emit(req, os.str(), out, err);
}

inline int cmd_classical(const RunRequest &req, std::ostream &out,
                         std::ostream &err) {
    if (req.n < 2 || req.n > static_cast<std::int64_t>(kMaxGameN)) {
        throw DomainError("classical: n must be in [2, " +
                          std::to_string(kMaxGameN) + "]");
    }
    if (req.trials < 1) {
        throw DomainError("classical: trials must be >= 1");
    }
    const auto mc = oracle::classical_monte_carlo(
        static_cast<std::size_t>(req.n), req.trials, req.seed);
    std::ostringstream os;
    switch (req.format) {
    case Format::Json:
        os << io::classical_to_json(mc).dump(2) << '\n';
        break;
    case Format::Csv:
        io::write_classical_csv(os, mc);
        break;
    case Format::Text:
        io::write_classical_text(os, mc);
        break;
    }
    return emit(req, os.str(), out, err);
}

inline int cmd_verify(const RunRequest &req, std::ostream &out,
                      std::ostream &err) {
    if (req.n_max < 2) {
        throw DomainError("verify: n-max must be >= 2 (got " +
                          std::to_string(req.n_max) + ")");
    }
    VerifyOptions opt;
    opt.n_max = static_cast<std::size_t>(req.n_max);
    opt.dense_cap = dense_cap_from_env();
    if (req.negate_strategy_phase) {
        opt.strategy = [](std::size_t n) {
            const UnitaryMatrix U = strategy_unitary(n);
            std::vector<Amplitude> e(U.entries().begin(), U.entries().end());
            for (auto &a : e) {
                a = std::conj(a);
            }
            return UnitaryMatrix(n, std::move(e));
        };
    }
    const auto checks = run_verification(opt);
    std::ostringstream os;
    std::size_t failed = 0;
    if (req.format == Format::Json) {
        io::json arr = io::json::array();
        for (const auto &c : checks) {
            arr.push_back({{"name", c.name},
                           {"status", c.skipped ? "skip" : (c.passed ? "pass" : "fail")},
                           {"detail", c.detail}});
            failed += !c.passed && !c.skipped;
        }
        os << io::json{{"checks", arr}, {"failed", failed}}.dump(2) << '\n';
    } else {
        if (req.format == Format::Csv) {
            os << "name,status,detail\n";
        }
        for (const auto &c : checks) {
            const char *status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
            failed += !c.passed && !c.skipped;
            if (req.format == Format::Csv) {
                os << c.name << ',' << status << ",\"" << c.detail << "\"\n";
            } else {
                os << status << "  " << c.name << "  (" << c.detail << ")\n";
            }
        }
        if (req.format == Format::Text) {
            os << (failed == 0 ? "all checks passed" : "checks failed: ")
               << (failed == 0 ? "" : std::to_string(failed)) << '\n';
        }
    }
    const int rc = emit(req, os.str(), out, err);
    if (rc != kOk) {
        return rc;
    }
    return failed == 0 ? kOk : kVerificationFailed;
}

/// Classical baselines next to the two quantum settings (p = 1 and the
/// best-outcome phase).
inline int cmd_compare(const RunRequest &req, std::ostream &out,
                       std::ostream &err) {
    const GameConfig worst_cfg = GameConfig::make(req.n, 1);
    const auto n = worst_cfg.n;
    const GameConfig best_cfg =
        GameConfig::make(req.n, best_phase(n));
    const GameReport avoid = run_closed_form(worst_cfg);
    const GameReport amplify = run_closed_form(best_cfg);

    struct Row {
        std::string scenario;
        std::int64_t p;
        double p_worst;
        double p_best;
    };
    std::vector<Row> rows = {
        {"classical", -1, classical_worst_probability(n),
         classical_best_probability(n)},
        {"quantum-avoid-worst", avoid.config.p, avoid.p_worst_quantum,
         avoid.p_best_quantum},
        {"quantum-amplify-best", amplify.config.p, amplify.p_worst_quantum,
         amplify.p_best_quantum},
    };
    if (checked_pow(n, static_cast<unsigned>(n)) <= oracle::kExhaustiveCap) {
        const auto ex = oracle::exhaustive_classical(n);
        rows.insert(rows.begin() + 1, {"classical-exhaustive", -1,
                                       ex.worst_probability(),
                                       ex.best_probability()});
    }

    std::ostringstream os;
    switch (req.format) {
    case Format::Json: {
        io::json arr = io::json::array();
        for (const auto &r : rows) {
            io::json j = {{"scenario", r.scenario},
                          {"p_worst", r.p_worst},
                          {"p_best", r.p_best}};
            if (r.p >= 0) {
                j["p"] = r.p;
            }
            arr.push_back(std::move(j));
        }
        os << io::json{{"n", n},
                       {"rows", arr},
                       {"best_ratio", amplify.best_ratio}}
                  .dump(2)
           << '\n';
        break;
    }
    case Format::Csv:
        os << "scenario,p,p_worst,p_best\n";
        for (const auto &r : rows) {
            os << r.scenario << ',' << (r.p >= 0 ? std::to_string(r.p) : "")
               << ',' << io::fmt17(r.p_worst) << ',' << io::fmt17(r.p_best)
               << '\n';
        }
        break;
    case Format::Text:
        os << "classical vs quantum, n=" << n << '\n';
        for (const auto &r : rows) {
            os << "  " << r.scenario;
            if (r.p >= 0) {
                os << " (p=" << r.p << ")";
            }
            os << ": P_worst=" << io::fmt17(r.p_worst)
               << " P_best=" << io::fmt17(r.p_best) << '\n';
        }
        os << "  best-outcome ratio = " << io::fmt17(amplify.best_ratio) << '\n';
        break;
    }
    return emit(req, os.str(), out, err);
}

} // namespace detail

/**
 * @brief Parses argv and runs one subcommand.
 *
 * Exit codes: 0 success, 1 verification failure, 2 dense/closed-form
 * discrepancy, 3 capacity, 4 usage error.
 */
inline int run(int argc, const char *const *argv, std::ostream &out,
               std::ostream &err) {
    CLI::App app{"Quantum trucker (congestion) game simulator", "qgame"};
    app.require_subcommand(1);
    RunRequest req;

    const std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", req.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--output", req.output_path,
                        "Write to this path instead of standard output");
    };

    auto *simulate = app.add_subcommand("simulate", "Run one game instance");
    simulate->add_option("--n", req.n, "Truckers (= roads)")->required();
    simulate->add_option("--p", req.p, "Phase parameter (any integer)");
    simulate->add_option("--engine", req.engine, "dense | closed-form | both")
        ->check(CLI::IsMember({"dense", "closed-form", "both"}));
    simulate->add_flag("--full", req.full, "List every outcome");
    simulate->add_flag("--raw", req.raw, "Include unpruned probabilities");
    add_common(simulate);

    auto *sweep = app.add_subcommand("sweep", "Quantum probabilities for every p");
    sweep->add_option("--n", req.n, "Truckers (= roads)")->required();
    add_common(sweep);

    auto *classical =
        app.add_subcommand("classical", "Seeded Monte Carlo classical baseline");
    classical->add_option("--n", req.n, "Truckers (= roads)")->required();
    classical->add_option("--trials", req.trials, "Number of trials");
    classical->add_option("--seed", req.seed, "64-bit seed");
    add_common(classical);

    auto *verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--n-max", req.n_max, "Largest n to check");
    verify->add_flag("--negate-strategy-phase", req.negate_strategy_phase,
                     "Negative control: conjugate the strategy matrix")
        ->group("");
    add_common(verify);

    auto *compare = app.add_subcommand(
        "compare", "Classical baseline next to both quantum settings");
    compare->add_option("--n", req.n, "Truckers (= roads)")->required();
    add_common(compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    auto *chosen = app.get_subcommands().front();
    req.command = chosen->get_name();
    // verify prints a text table unless a format was given.
    if (req.command == "verify" && chosen->count("--format") == 0) {
        req.format = Format::Text;
    }

    try {
        if (req.command == "simulate") {
            return detail::cmd_simulate(req, out, err);
        }
        if (req.command == "sweep") {
            return detail::cmd_sweep(req, out, err);
        }
        if (req.command == "classical") {
            return detail::cmd_classical(req, out, err);
        }
        if (req.command == "verify") {
            return detail::cmd_verify(req, out, err);
        }
        return detail::cmd_compare(req, out, err);
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

/// Convenience overload for in-process callers.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
    std::vector<const char *> argv{"qgame"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qgame::cli
