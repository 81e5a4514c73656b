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

#ifndef IPRED_ENGINE_HPP
#define IPRED_ENGINE_HPP

#include "ipred/interference_model.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ipred {

enum class PredictorKind { dtmc, iir, genie };

std::string_view to_string(PredictorKind kind);

/// Throws std::invalid_argument for unknown names.
PredictorKind parse_predictor_kind(std::string_view name);

/// A predictor kind plus its confidence (only the DTMC reads eta).
struct PredictorSpec {
    PredictorKind kind = PredictorKind::dtmc;
    double eta = 0.95;

    /// "dtmc@0.95", "iir", "genie".
    std::string label() const;
};

/// Invalid configuration value; key() names the offending field.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string key, const std::string& message)
        : std::invalid_argument(key + ": " + message), key_(std::move(key))
    {
    }

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Defaults are the baseline scenario (preset "table1").
struct ScenarioConfig {
    double mean_snr_db = 20.0;
    DbRange inr_range_db{-10.0, 5.0};
    std::size_t n_interferers = 5;
    double payload_bits = 50.0;
    std::size_t state_count = 20;
    double confidence = 0.95;
    double iir_alpha = 0.01;
    double correlation = 0.0;
    double learning_scale = 1.0;
    std::size_t warmup_length = 1000;
    std::size_t measured_slots = 1'000'000;
    std::vector<double> target_errors{1e-1, 1e-2, 1e-3, 1e-4};
    std::uint64_t seed = 1;
    PredictorKind predictor = PredictorKind::dtmc;

    /// Throws ValidationError naming the first offending key.
    void validate() const;

    PredictorSpec predictor_spec() const { return {predictor, confidence}; }
};

/// Interference scenario presets; returns false for an unknown name.
bool apply_scenario_preset(std::string_view name, ScenarioConfig& config);

/// Names accepted by apply_scenario_preset(), the baseline first.
std::span<const std::string_view> scenario_preset_names();

/// One measured slot. Per-target vectors follow config.target_errors.
struct SlotRecord {
    std::uint64_t t = 0;
    double actual_interference = 0.0;
    double predicted_interference = 0.0;
    double snr = 0.0;
    double predicted_sinr = 0.0;
    double actual_sinr = 0.0;
    std::vector<double> blocklength;    ///< 0 marks an infeasible allocation
    std::vector<double> realized_error;
};

using SlotObserver = std::function<void(const SlotRecord&)>;

struct TargetMetrics {
    double target_error = 0.0;
    double achieved_outage = 0.0;   ///< mean realized error over measured slots
    double mean_ru = 0.0;           ///< channel uses, feasible slots only
    double genie_mean_ru = 0.0;     ///< exact-knowledge allocation on the same slots
    double ru_excess_stderr = 0.0;  ///< standard error of mean(R - R_genie), paired per slot
    std::uint64_t infeasible_slots = 0;

    double ru_ratio_vs_genie() const { return mean_ru / genie_mean_ru; }
};

struct RunMetrics {
    PredictorSpec predictor;
    std::vector<TargetMetrics> targets;
    double quantile_coverage = 0.0; ///< Pr[actual <= predicted]
    std::uint64_t slots = 0;
    std::uint64_t seed = 0;
    std::uint64_t realization_checksum = 0; ///< FNV-1a over every (I, sigma) drawn

    const TargetMetrics& at_target(double target_error) const;
};

/*
 * Seeded channel realization shared by every predictor: fixed mean INRs,
 * Gauss-Markov interferer gains and an independently faded desired link.
 * Slots are drawn in order, so the same seed gives the same sequence of
 * (interference, snr) pairs.
 */
class ChannelRealization {
public:
    explicit ChannelRealization(const ScenarioConfig& config);

    struct Slot {
        double interference;
        double snr;
    };

    Slot next();

    const InterfererSet& interferers() const { return interferers_; }
    std::uint64_t checksum() const { return checksum_; }

private:
    RandomStream rng_;
    InterfererSet interferers_;
    DesiredLink desired_;
    std::uint64_t checksum_;
};

/*
 * Warm-up, then per measured slot: predict, allocate for every target,
 * draw the actual interference, score the realized error and feed the
 * sample back to the predictor. Deterministic given the config.
 */
RunMetrics run_scenario(const ScenarioConfig& config, const SlotObserver& observer = {});

/// Runs `spec` in place of config.predictor / config.confidence.
RunMetrics run_predictor(const ScenarioConfig& config, const PredictorSpec& spec,
                         const SlotObserver& observer = {});

/// Every spec on the same seed, run concurrently; results in input order.
std::vector<RunMetrics> compare_predictors(const ScenarioConfig& config, std::span<const PredictorSpec> specs);

/// DTMC at each eta on a shared seed.
std::vector<RunMetrics> sweep_eta(const ScenarioConfig& config, std::span<const double> etas);

} // namespace ipred

#endif // IPRED_ENGINE_HPP
