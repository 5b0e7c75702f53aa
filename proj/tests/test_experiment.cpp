/*
 * Copyright 2026 The agdec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "experiment.hpp"

using namespace agdec;

namespace {

const char* h9_config = R"(# Hermitian F9
curve_inline = name h9; field 3 2; cab 3 4; term 4 0 1; term 0 1 2
degG = 6
ell = 1
t = radius
trials = 4
seed = 99
)";

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("config parsing")
{
    const ExperimentConfig c = ExperimentConfig::parse(h9_config);
    CHECK(c.curve_source == "inline");
    CHECK(c.degG == 6);
    CHECK(c.trials == 4);
    CHECK(c.seed == 99);
    CHECK(c.format == OutputFormat::csv);
    CHECK(c.error_model == ErrorModel::uniform);

    const std::string base = "curve_inline = field 11 1; line\ndegG = 3\n";
    CHECK_THROWS_AS(ExperimentConfig::parse(base), Error);  // no seed
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\nseed = 2\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\ncolour = red\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = -1\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\ntrials = 0\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\nformat = xml\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\nerror_model = burst\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse(base + "seed = 1\njunk\n"), Error);
    CHECK_THROWS_AS(ExperimentConfig::parse("degG = 3\nseed = 1\n"), Error);
    CHECK_NOTHROW(ExperimentConfig::parse(base + "seed = 0x10\npoint_policy = max-drop\n"));
}

TEST_CASE("symbolic t")
{
    CHECK(resolve_t("radius", 64, 8, 2) == 34);
    CHECK(resolve_t("radius+1", 64, 8, 2) == 35);
    CHECK(resolve_t("half_designed", 64, 8, 2) == 27);
    CHECK(resolve_t("12", 64, 8, 2) == 12);
    CHECK_THROWS_AS(resolve_t("64", 64, 8, 2), Error);
    CHECK_THROWS_AS(resolve_t("many", 64, 8, 2), Error);
}

TEST_CASE("curve labels")
{
    const auto f16 = Field::create(2, 4);
    CHECK(curve_label(*CabCurve::create(f16, 4, 5, {{5, 0, 1}, {0, 1, 1}})) == "y^4=x^5+y/F16");
    CHECK(curve_label(*CabCurve::create(f16, 4, 5, {{5, 0, 1}, {0, 1, 1}}, "herm")) == "herm");
    CHECK(curve_label(*CabCurve::line(Field::create(11, 1))) == "line/F11");
}

TEST_CASE("runs are deterministic")
{
    const ExperimentConfig c = ExperimentConfig::parse(h9_config);
    const std::string a = format_csv(run_experiment(c)), b = format_csv(run_experiment(c));
    CHECK(a == b);
    const ExperimentResult r = run_experiment(c);
    CHECK(r.summary.successes == 4);
    CHECK(r.t == 10);
}

TEST_CASE("csv, json and markdown carry the same values")
{
    ExperimentConfig c = ExperimentConfig::parse(h9_config);
    const ExperimentResult r = run_experiment(c);
    const auto rows = parse_csv(format_csv(r));
    const auto j = nlohmann::json::parse(format_json(r));
    const std::string md = format_markdown(r);
    REQUIRE(rows.size() == r.trials.size() + 1);
    CHECK(rows[0].size() == 14);
    CHECK(rows[0][0] == "ell");
    CHECK(rows[0][13] == "success");
    for (std::size_t i = 0; i < r.trials.size(); ++i) {
        const auto& row = rows[i + 1];
        const auto& jt = j["trials"][i];
        CHECK(row[1] == std::to_string(j["params"]["q"].get<int>()));
        CHECK(row[2] == j["params"]["curve"].get<std::string>());
        CHECK(row[9] == std::to_string(j["params"]["t"].get<int>()));
        CHECK(row[10] == (jt["pts_in_De"].get<bool>() ? "true" : "false"));
        CHECK(row[11] == std::to_string(jt["delta0"].get<long>()));
        std::string gaps;
        for (const auto& g : jt["delta_gaps"]) gaps += (gaps.empty() ? "" : ";") + std::to_string(g.get<long>());
        CHECK(row[12] == gaps);
        CHECK(row[13] == (jt["success"].get<bool>() ? "true" : "false"));
        const std::string md_row = "| 9 | h9 | 3 | 27 | 6 | 10 | ";
        CHECK(md.find(md_row) != std::string::npos);
    }
    CHECK(j["summary"]["successes"].get<int>() == 4);
    CHECK(md.find("success rate: 4/4") != std::string::npos);
}

TEST_CASE("timing column is opt-in")
{
    ExperimentConfig c = ExperimentConfig::parse(std::string(h9_config) + "include_timing = true\n");
    const std::string csv = format_csv(run_experiment(c));
    CHECK(csv.substr(0, csv.find('\n')).find(",wall_ms") != std::string::npos);
}

TEST_CASE("worst-case error model: failures show unit gaps")
{
    const std::string cfg = std::string(h9_config).replace(std::string(h9_config).find("t = radius"), 10, "t = 11") +
                            "error_model = worst-case\n";
    const ExperimentResult r = run_experiment(ExperimentConfig::parse(cfg));
    CHECK(r.summary.successes < r.summary.trials);
    for (const auto& t : r.trials) {
        if (t.success) continue;
        CHECK_FALSE(t.delta_gaps.empty());
        for (long g : t.delta_gaps) CHECK(g == 1);
    }
}

TEST_CASE("self-test")
{
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(run_selftest(seed).passed());
    const SelftestReport bad = run_selftest(1, "modulus");
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_text().find("FAIL field axioms F16") != std::string::npos);
    CHECK_THROWS_AS(run_selftest(1, "cosmic-ray"), Error);
}
