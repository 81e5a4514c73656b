// SPDX-License-Identifier: Apache-2.0
//
// ipred - interference prediction for URLLC link adaptation
// Copyright (C) 2026 The ipred authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ipred/config.hpp"
#include "ipred/results.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace ipred;
using nlohmann::json;

namespace {

std::string key_of(std::string_view text)
{
    try {
        parse_config_text(text);
    } catch (const ValidationError& e) {
        return e.key();
    }
    return {};
}

std::vector<RunMetrics> two_short_runs()
{
    ScenarioConfig config;
    config.measured_slots = 5000;
    config.target_errors = {1e-1, 1e-2, 1e-3};
    const std::array specs{PredictorSpec{PredictorKind::dtmc, 0.9}, PredictorSpec{PredictorKind::genie}};
    return compare_predictors(config, specs);
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("ipred_test_" + name);
}

} // namespace

TEST_CASE("config parsing")
{
    SUBCASE("empty text and empty object give the defaults")
    {
        const ScenarioConfig defaults;
        for (std::string_view text : {"", "{}"}) {
            const auto c = parse_config_text(text);
            CHECK(config_to_json(c) == config_to_json(defaults));
        }
    }
    SUBCASE("explicit keys")
    {
        const auto c = parse_config_text(R"({"mean_snr_db": 25, "inr_range_db": [-3, 4],
            "target_errors": [0.01], "seed": 9, "predictor": "iir", "correlation": 0.5})");
        CHECK(c.mean_snr_db == 25.0);
        CHECK(c.inr_range_db.min_db == -3.0);
        CHECK(c.inr_range_db.max_db == 4.0);
        CHECK(c.target_errors == std::vector<double>{0.01});
        CHECK(c.seed == 9);
        CHECK(c.predictor == PredictorKind::iir);
        CHECK(c.correlation == 0.5);
    }
    SUBCASE("preset first, explicit keys override")
    {
        const auto c = parse_config_text(R"({"scenario": "weak-snr-weak-interference", "mean_snr_db": 6})");
        CHECK(c.mean_snr_db == 6.0);
        CHECK(c.inr_range_db.max_db == 5.0);
    }
    SUBCASE("errors name the offending key")
    {
        CHECK(key_of(R"({"confidence": 1.5})") == "confidence");
        CHECK(key_of(R"({"confidence": "high"})") == "confidence");
        CHECK(key_of(R"({"bogus": 1})") == "bogus");
        CHECK(key_of(R"({"scenario": "mars"})") == "scenario");
        CHECK(key_of(R"({"target_errors": [0.1, 0]})") == "target_errors[1]");
        CHECK(key_of(R"({"n_interferers": -2})") == "n_interferers");
        CHECK(key_of(R"({"inr_range_db": [1]})") == "inr_range_db");
        CHECK(key_of(R"({"predictor": "oracle"})") == "predictor");
        CHECK(key_of("[1, 2]") == "<root>");
    }
    SUBCASE("round trip through JSON")
    {
        auto c = parse_config_text(R"({"scenario": "strong-snr-strong-interference", "seed": 4})");
        const auto snapshot = config_to_json(c);
        CHECK(config_to_json(config_from_json(snapshot)) == snapshot);
    }
    SUBCASE("files")
    {
        const auto path = scratch("config.json");
        std::ofstream(path) << R"({"payload_bits": 32})";
        CHECK(parse_config(path).payload_bits == 32.0);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(parse_config(path), std::runtime_error);
    }
}

TEST_CASE("result rows")
{
    const auto runs = two_short_runs();
    const auto rows = to_rows(runs, "custom");
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].predictor == "dtmc");
    REQUIRE(rows[0].eta.has_value());
    CHECK(*rows[0].eta == 0.9);
    CHECK(rows[3].predictor == "genie");
    CHECK_FALSE(rows[3].eta.has_value());
    CHECK(rows[3].ru_ratio_vs_genie == doctest::Approx(1.0));
    CHECK(rows[1].target_error == 1e-2);
    CHECK(rows[0].scenario == "custom");
    CHECK(rows[0].slots == 5000);
}

TEST_CASE("CSV output")
{
    const auto rows = to_rows(two_short_runs(), "custom");
    std::ostringstream out;
    write_csv(out, rows);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "scenario,predictor,eta,target_error,achieved_outage,mean_ru,ru_ratio_vs_genie,"
                  "quantile_coverage,slots,seed");
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), ',') == 9);
        if (line.rfind("custom,genie,", 0) == 0)
            CHECK(line.find("genie,,") != std::string::npos);
    }
    CHECK(count == rows.size());
}

TEST_CASE("JSON output round trips bit-exactly")
{
    const auto rows = to_rows(two_short_runs(), "custom");
    RunManifest manifest;
    manifest.config = config_to_json(ScenarioConfig{});
    manifest.seed = 1;
    manifest.command = "run";
    manifest.started_at = "2026-01-01T00:00:00Z";
    const auto doc = to_json(rows, manifest);
    CHECK(doc.at("manifest").at("version") == std::string(artifact_version));
    CHECK_FALSE(doc.at("manifest").contains("started_at"));
    CHECK(doc.at("results").at(3).at("eta").is_null());
    CHECK(rows_from_json(json::parse(doc.dump())) == rows);
}

TEST_CASE("emit_results writes the file and its manifest")
{
    const auto rows = to_rows(two_short_runs(), "custom");
    RunManifest manifest;
    manifest.seed = 1;
    manifest.started_at = utc_timestamp();
    manifest.finished_at = utc_timestamp();
    const auto path = scratch("out.json");
    emit_results(path, OutputFormat::json, rows, manifest);
    std::ifstream in(path);
    CHECK(rows_from_json(json::parse(in)) == rows);
    std::ifstream side(path.string() + ".manifest.json");
    const auto full = json::parse(side);
    CHECK(full.contains("started_at"));
    CHECK(full.at("finished_at").get<std::string>().size() == 20);
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".manifest.json");

    CHECK_THROWS_AS(emit_results("/nonexistent-dir/x.csv", OutputFormat::csv, rows, manifest), std::runtime_error);
    CHECK(parse_output_format("csv") == OutputFormat::csv);
    CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}
