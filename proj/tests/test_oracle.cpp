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
#include <cmath>
#include <random>

#include <catch_amalgamated.hpp>

#include "qgame/game.hpp"
#include "qgame/oracle.hpp"

using namespace qgame;
using Catch::Approx;

namespace {

OutcomeTuple tup(std::initializer_list<std::size_t> d) { return {d}; }

/// Generator that replays a fixed sequence (for rejection-path tests).
struct Scripted {
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    std::vector<result_type> seq;
    std::size_t pos = 0;
    result_type operator()() { return seq.at(pos++); }
};

} // namespace

TEST_CASE("brute_force_amplitude: named values", "[oracle]") {
    CHECK(amp_norm_sq(oracle::brute_force_amplitude(2, 1, tup({0, 1}))) ==
          Approx(0.5).margin(1e-15));
    CHECK(std::abs(oracle::brute_force_amplitude(3, 1, tup({1, 1, 1}))) < 1e-14);
    CHECK(amp_norm_sq(oracle::brute_force_amplitude(4, 2, tup({0, 1, 2, 3}))) ==
          Approx(1.0 / 64.0).margin(1e-15));
    CHECK_THROWS_AS(oracle::brute_force_amplitude(9, 1, OutcomeTuple{std::vector<std::size_t>(9)}),
                    DomainError);
    CHECK_THROWS_AS(oracle::brute_force_amplitude(3, 1, tup({0, 1})), DomainError);
}

TEST_CASE("brute force equals closed form for n <= 5", "[oracle]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto nn = static_cast<std::int64_t>(n);
        for (std::int64_t p = 0; p < nn; ++p) {
            const auto rep = run_closed_form(GameConfig::make(nn, p));
            for (const auto &r : rep.per_outcome) {
                const Amplitude brute = oracle::brute_force_amplitude(n, p, r.outcome);
                REQUIRE(std::abs(brute - r.amplitude) < 1e-10);
            }
        }
    }
}

TEST_CASE("uniform_below: rejection path and range", "[oracle]") {
    // bound 3: threshold = 2^64 mod 3 = 1, so a draw with low word 0 is
    // rejected.
    Scripted g{{0, ~std::uint64_t{0}}};
    CHECK(oracle::uniform_below(g, 3) == 2);
    CHECK(g.pos == 2);

    std::mt19937_64 rng(5);
    std::vector<std::uint64_t> hist(7);
    for (int i = 0; i < 70'000; ++i)
        ++hist.at(oracle::uniform_below(rng, 7));
    for (const auto h : hist)
        CHECK(std::abs(static_cast<double>(h) - 10'000.0) < 5 * std::sqrt(10'000.0 * 6 / 7));
}

TEST_CASE("classical Monte Carlo lands within 5 sigma", "[oracle]") {
    const std::uint64_t trials = 1'000'000;
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto mc = oracle::classical_monte_carlo(n, trials, 42 + n);
        const double qw = classical_worst_probability(n);
        const double qb = classical_best_probability(n);
        const double sw = std::sqrt(qw * (1 - qw) / trials);
        const double sb = std::sqrt(qb * (1 - qb) / trials);
        INFO("n=" << n << " worst=" << mc.empirical_worst << " best=" << mc.empirical_best);
        CHECK(std::abs(mc.empirical_worst - qw) < 5 * sw);
        CHECK(std::abs(mc.empirical_best - qb) < 5 * sb);
        CHECK(mc.empirical_worst == static_cast<double>(mc.worst_count) / trials);
        CHECK(mc.empirical_best == static_cast<double>(mc.best_count) / trials);
        CHECK(mc.worst_count + mc.best_count <= trials);
    }
}

TEST_CASE("classical Monte Carlo is deterministic per seed", "[oracle]") {
    const auto a = oracle::classical_monte_carlo(2, 1, 7);
    const auto b = oracle::classical_monte_carlo(2, 1, 7);
    CHECK(a.worst_count == b.worst_count);
    CHECK(a.best_count == b.best_count);
    CHECK(a.worst_count + a.best_count == 1);

    const auto c = oracle::classical_monte_carlo(5, 10'000, 1);
    const auto d = oracle::classical_monte_carlo(5, 10'000, 1);
    const auto e = oracle::classical_monte_carlo(5, 10'000, 2);
    CHECK(c.worst_count == d.worst_count);
    CHECK(c.best_count == d.best_count);
    CHECK((c.best_count != e.best_count || c.worst_count != e.worst_count));
    CHECK(c.generator == "mt19937_64");
    CHECK_THROWS_AS(oracle::classical_monte_carlo(3, 0, 1), DomainError);
}

TEST_CASE("exhaustive classical enumeration", "[oracle]") {
    const auto e2 = oracle::exhaustive_classical(2);
    CHECK(e2.worst_probability() == 0.5);
    CHECK(e2.best_probability() == 0.5);
    const auto e3 = oracle::exhaustive_classical(3);
    CHECK(e3.worst() == Ratio(1, 9));
    CHECK(e3.best() == Ratio(2, 9));
    const auto e4 = oracle::exhaustive_classical(4);
    CHECK(e4.worst_count == 4);
    CHECK(e4.best_count == 24);
    CHECK(e4.total == 256);
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto e = oracle::exhaustive_classical(n);
        REQUIRE(e.worst() == classical_worst_ratio(n));
        REQUIRE(e.best() == classical_best_ratio(n));
        REQUIRE(std::abs(e.worst_probability() - classical_worst_probability(n)) < 1e-15);
        REQUIRE(std::abs(e.best_probability() - classical_best_probability(n)) < 1e-15);
    }
    CHECK_THROWS_AS(oracle::exhaustive_classical(9), CapacityError);
}
