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

#ifndef IPRED_RESULTS_HPP
#define IPRED_RESULTS_HPP

#include "ipred/engine.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipred {

inline constexpr std::string_view artifact_version = "1.0.0";

/// One (scenario, predictor, eta, target) result line.
struct ResultRow {
    std::string scenario;
    std::string predictor;
    std::optional<double> eta; ///< DTMC only
    double target_error = 0.0;
    double achieved_outage = 0.0;
    double mean_ru = 0.0;
    double ru_ratio_vs_genie = 0.0;
    double quantile_coverage = 0.0;
    std::uint64_t slots = 0;
    std::uint64_t seed = 0;

    bool operator==(const ResultRow&) const = default;
};

/*
 * Provenance of a result set. The deterministic part (version, config,
 * seed) is embedded in every result file; wall-clock timestamps only go to
 * the sidecar manifest so re-runs produce identical result files.
 */
struct RunManifest {
    std::string version{artifact_version};
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::string command;
    std::string started_at;
    std::string finished_at;
    std::vector<std::string> outputs;

    nlohmann::json deterministic_json() const;
    nlohmann::json full_json() const;
};

enum class OutputFormat { csv, json };

/// Throws std::invalid_argument for anything but "csv" / "json".
OutputFormat parse_output_format(std::string_view name);

/// One row per target of every run, tagged with `scenario`.
std::vector<ResultRow> to_rows(std::span<const RunMetrics> runs, std::string_view scenario);

/// Header plus rows, numbers at 10 significant digits. The producing
/// config lives in the `<path>.manifest.json` sidecar written alongside.
void write_csv(std::ostream& out, std::span<const ResultRow> rows);

/// Rows at full round-trip precision plus the deterministic manifest.
nlohmann::json to_json(std::span<const ResultRow> rows, const RunManifest& manifest);

std::vector<ResultRow> rows_from_json(const nlohmann::json& doc);

/// Writes the result file and `<path>.manifest.json`. Throws
/// std::runtime_error if either cannot be written.
void emit_results(const std::filesystem::path& path, OutputFormat format, std::span<const ResultRow> rows,
                  RunManifest manifest);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

} // namespace ipred

#endif // IPRED_RESULTS_HPP
