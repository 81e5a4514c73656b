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

#include "ipred/engine.hpp"
#include "ipred/fbl.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace ipred;
using ipred::test::rel_err;

namespace {

ScenarioConfig small_config(std::uint64_t seed = 3)
{
    ScenarioConfig config;
    config.measured_slots = 10'000;
    config.seed = seed;
    return config;
}

} // namespace

TEST_CASE("predictor names")
{
    CHECK(parse_predictor_kind("dtmc") == PredictorKind::dtmc);
    CHECK(parse_predictor_kind("iir") == PredictorKind::iir);
    CHECK(parse_predictor_kind("genie") == PredictorKind::genie);
    CHECK_THROWS_AS(parse_predictor_kind("oracle"), std::invalid_argument);
    CHECK(to_string(PredictorKind::iir) == "iir");
    CHECK(PredictorSpec{PredictorKind::dtmc, 0.95}.label() == "dtmc@0.95");
    CHECK(PredictorSpec{PredictorKind::genie, 0.95}.label() == "genie");
}

TEST_CASE("config validation")
{
    ScenarioConfig config;
    CHECK_NOTHROW(config.validate());

    auto key_of = [](const ScenarioConfig& c) {
        try {
            c.validate();
        } catch (const ValidationError& e) {
            return e.key();
        }
        return std::string{};
    };
    auto bad = config;
    bad.confidence = 1.5;
    CHECK(key_of(bad) == "confidence");
    bad = config;
    bad.correlation = 1.0;
    CHECK(key_of(bad) == "correlation");
    bad = config;
    bad.target_errors = {1e-2, 0.7};
    CHECK(key_of(bad) == "target_errors[1]");
    bad = config;
    bad.mean_snr_db = 0.0; // weaker than the strongest interferer
    CHECK(key_of(bad) == "mean_snr_db");
    bad = config;
    bad.warmup_length = 1;
    CHECK(key_of(bad) == "warmup_length");
    bad = config;
    bad.state_count = 1;
    CHECK(key_of(bad) == "state_count");
}

TEST_CASE("scenario presets")
{
    ScenarioConfig config;
    REQUIRE(apply_scenario_preset("strong-snr-strong-interference", config));
    CHECK(config.mean_snr_db == 20.0);
    CHECK(config.inr_range_db.min_db == 0.0);
    CHECK(config.inr_range_db.max_db == 20.0);
    REQUIRE(apply_scenario_preset("weak-snr-weak-interference", config));
    CHECK(config.mean_snr_db == 5.0);
    CHECK_FALSE(apply_scenario_preset("nope", config));
    CHECK(scenario_preset_names().size() == 4);
    for (auto name : scenario_preset_names()) {
        ScenarioConfig c;
        CHECK(apply_scenario_preset(name, c));
        CHECK_NOTHROW(c.validate());
    }
}

TEST_CASE("genie meets every target exactly")
{
    auto config = small_config();
    config.predictor = PredictorKind::genie;
    const auto run = run_scenario(config);
    CHECK(run.quantile_coverage == 1.0);
    for (const auto& t : run.targets) {
        CAPTURE(t.target_error);
        CHECK(rel_err(t.achieved_outage, t.target_error) < 1e-3);
        CHECK(t.ru_ratio_vs_genie() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.infeasible_slots == 0);
    }
}

TEST_CASE("outage is the mean of per-slot realized error")
{
    auto config = small_config();
    std::vector<double> sum(config.target_errors.size(), 0.0);
    std::vector<double> ru(config.target_errors.size(), 0.0);
    std::uint64_t count = 0;
    std::uint64_t covered = 0;
    const auto run = run_scenario(config, [&](const SlotRecord& r) {
        CHECK(r.t == count);
        ++count;
        covered += r.actual_interference <= r.predicted_interference ? 1 : 0;
        CHECK(r.predicted_sinr == doctest::Approx(r.snr / r.predicted_interference));
        for (std::size_t k = 0; k < sum.size(); ++k) {
            // Score each slot independently of the engine.
            const double expected = fbl::realized_error(
                config.payload_bits,
                fbl::required_blocklength(config.payload_bits, config.target_errors[k], r.predicted_sinr),
                r.actual_sinr);
            REQUIRE(rel_err(r.realized_error[k], expected) < 1e-12);
            sum[k] += r.realized_error[k];
            ru[k] += r.blocklength[k];
        }
    });
    REQUIRE(count == config.measured_slots);
    CHECK(run.quantile_coverage == static_cast<double>(covered) / count);
    for (std::size_t k = 0; k < sum.size(); ++k) {
        CHECK(rel_err(run.targets[k].achieved_outage, sum[k] / count) < 1e-12);
        CHECK(rel_err(run.targets[k].mean_ru, ru[k] / count) < 1e-12);
    }
}

TEST_CASE("runs are reproducible")
{
    const auto config = small_config(11);
    const auto a = run_scenario(config);
    const auto b = run_scenario(config);
    CHECK(a.realization_checksum == b.realization_checksum);
    for (std::size_t k = 0; k < a.targets.size(); ++k) {
        CHECK(a.targets[k].achieved_outage == b.targets[k].achieved_outage);
        CHECK(a.targets[k].mean_ru == b.targets[k].mean_ru);
    }
    CHECK(run_scenario(small_config(12)).realization_checksum != a.realization_checksum);
}

TEST_CASE("predictors see the same channel realization")
{
    const auto config = small_config(5);
    const std::array specs{PredictorSpec{PredictorKind::dtmc, 0.9}, PredictorSpec{PredictorKind::iir},
                           PredictorSpec{PredictorKind::genie}};
    const auto runs = compare_predictors(config, specs);
    REQUIRE(runs.size() == 3);
    for (const auto& r : runs) {
        CHECK(r.realization_checksum == runs[0].realization_checksum);
        for (std::size_t k = 0; k < r.targets.size(); ++k)
            CHECK(r.targets[k].genie_mean_ru == runs[0].targets[k].genie_mean_ru);
    }
    // Concurrency does not change the answer.
    const auto serial = run_predictor(config, specs[0]);
    CHECK(serial.targets[0].achieved_outage == runs[0].targets[0].achieved_outage);
    CHECK(runs[0].predictor.label() == "dtmc@0.9");
}

TEST_CASE("sweep_eta orders resource use")
{
    auto config = small_config(6);
    config.measured_slots = 50'000;
    const std::array etas{0.8, 0.9, 0.95};
    const auto runs = sweep_eta(config, etas);
    REQUIRE(runs.size() == 3);
    for (std::size_t k = 1; k < runs.size(); ++k) {
        CHECK(runs[k].predictor.eta == etas[k]);
        CHECK(runs[k].at_target(1e-2).mean_ru > runs[k - 1].at_target(1e-2).mean_ru);
        CHECK(runs[k].quantile_coverage >= runs[k - 1].quantile_coverage);
    }
    CHECK_THROWS_AS(runs[0].at_target(0.3), std::out_of_range);
}

TEST_CASE("run_predictor rejects a bad eta")
{
    CHECK_THROWS_AS(run_predictor(small_config(), {PredictorKind::dtmc, 1.0}), ValidationError);
    CHECK_NOTHROW(run_predictor(small_config(), {PredictorKind::iir, 1.0}));
}

TEST_CASE("smoke: every preset and predictor at 1e4 slots")
{
    for (auto name : scenario_preset_names())
        for (auto kind : {PredictorKind::dtmc, PredictorKind::iir, PredictorKind::genie}) {
            auto config = small_config(2);
            REQUIRE(apply_scenario_preset(name, config));
            config.predictor = kind;
            const auto run = run_scenario(config);
            for (const auto& t : run.targets) {
                CHECK(std::isfinite(t.mean_ru));
                CHECK(t.achieved_outage >= 0.0);
                CHECK(t.achieved_outage <= 1.0);
            }
        }
}
