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
#include <sstream>

#include <catch_amalgamated.hpp>

#include "qgame/report_io.hpp"

using namespace qgame;
using Catch::Approx;

TEST_CASE("JSON report schema", "[io]") {
    const auto rep = run_dense(GameConfig::make(2, 1));
    const auto j = io::to_json(rep);
    CHECK(j.at("config").at("n") == 2);
    CHECK(j.at("config").at("p") == 1);
    CHECK(j.at("quantum").at("p_worst") == 0.0);
    CHECK(j.at("quantum").at("p_best").get<double>() == Approx(1.0));
    CHECK(j.at("classical").at("p_worst") == 0.5);
    CHECK(j.at("classical").at("p_best") == 0.5);
    CHECK(j.contains("best_ratio"));
    REQUIRE(j.at("outcomes").size() == 4);
    const auto &o = j.at("outcomes").at(1);
    CHECK(o.at("digits") == std::vector<std::size_t>{0, 1});
    CHECK(o.at("m") == 2);
    CHECK(o.at("class") == "best");
    CHECK_FALSE(o.contains("raw"));
    CHECK(io::to_json(rep, {true}).at("outcomes").at(0).contains("raw"));
}

TEST_CASE("JSON report round trip is value-identical", "[io][property]") {
    for (std::int64_t n = 2; n <= 4; ++n) {
        for (std::int64_t p = 0; p < n; ++p) {
            for (const Engine e : {Engine::Dense, Engine::ClosedForm, Engine::Both}) {
                for (const bool raw : {false, true}) {
                    const auto rep = run(GameConfig::make(n, p), e);
                    const std::string first = io::to_json(rep, {raw}).dump();
                    const auto back =
                        io::report_from_json(io::json::parse(first));
                    REQUIRE(io::to_json(back, {raw}).dump() == first);
                }
            }
        }
    }
    const auto big = run_closed_form(GameConfig::make(20, 10));
    const std::string s = io::to_json(big).dump();
    CHECK_FALSE(io::json::parse(s).contains("outcomes"));
    CHECK(io::to_json(io::report_from_json(io::json::parse(s))).dump() == s);
}

TEST_CASE("JSON report: inconsistent class rejected", "[io]") {
    auto j = io::to_json(run_dense(GameConfig::make(2, 1)));
    j["outcomes"][0]["class"] = "best";
    CHECK_THROWS_AS(io::report_from_json(j), DomainError);
}

TEST_CASE("CSV report: fixed columns and 17 digits", "[io]") {
    std::ostringstream os;
    io::write_csv(os, run_dense(GameConfig::make(3, 1)));
    std::istringstream in(os.str());
    std::string header, row;
    std::getline(in, header);
    CHECK(header == io::kOutcomeCsvHeader);
    std::getline(in, row);
    CHECK(row.rfind("0,0 0 0,1,0,worst,", 0) == 0);
    std::getline(in, row);
    std::getline(in, row);
    // index 2 = (0,0,2), probability 1/9.
    CHECK(row.rfind("2,0 0 2,3,", 0) == 0);
    CHECK(io::fmt17(1.0 / 9.0) == "0.1111111111111111");
    CHECK(io::fmt17(0.1) == "0.10000000000000001");
    CHECK(std::stod(io::fmt17(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("sweep and classical serializations", "[io]") {
    const auto rows = sweep_phase(4);
    const auto j = io::sweep_to_json(4, rows);
    CHECK(j.at("rows").size() == 4);
    CHECK(j.at("rows").at(2).at("p_best_quantum") == 0.375);

    std::ostringstream csv;
    io::write_sweep_csv(csv, rows);
    CHECK(csv.str().rfind(std::string(io::kSweepCsvHeader) + "\n0,", 0) == 0);

    const auto mc = oracle::classical_monte_carlo(5, 1000, 1);
    const auto cj = io::classical_to_json(mc);
    CHECK(cj.at("best").at("analytic") == 120.0 / 3125.0);
    CHECK(cj.at("generator") == "mt19937_64");
    CHECK(cj.at("seed") == 1);
}
