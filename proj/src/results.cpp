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

#include "ipred/results.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ipred {

using nlohmann::json;

json RunManifest::deterministic_json() const
{
    return json{{"version", version}, {"config", config}, {"seed", seed}, {"command", command}};
}

json RunManifest::full_json() const
{
    auto doc = deterministic_json();
    doc["started_at"] = started_at;
    doc["finished_at"] = finished_at;
    doc["outputs"] = outputs;
    return doc;
}

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<ResultRow> to_rows(std::span<const RunMetrics> runs, std::string_view scenario)
{
    std::vector<ResultRow> rows;
    for (const auto& run : runs) {
        for (const auto& target : run.targets) {
            ResultRow row;
            row.scenario = scenario;
            row.predictor = to_string(run.predictor.kind);
            if (run.predictor.kind == PredictorKind::dtmc)
                row.eta = run.predictor.eta;
            row.target_error = target.target_error;
            row.achieved_outage = target.achieved_outage;
            row.mean_ru = target.mean_ru;
            row.ru_ratio_vs_genie = target.ru_ratio_vs_genie();
            row.quantile_coverage = run.quantile_coverage;
            row.slots = run.slots;
            row.seed = run.seed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

std::string sig10(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", value);
    return buf;
}

} // namespace

void write_csv(std::ostream& out, std::span<const ResultRow> rows)
{
    out << "scenario,predictor,eta,target_error,achieved_outage,mean_ru,ru_ratio_vs_genie,"
           "quantile_coverage,slots,seed\n";
    for (const auto& r : rows) {
        out << r.scenario << ',' << r.predictor << ',' << (r.eta ? sig10(*r.eta) : "") << ','
            << sig10(r.target_error) << ',' << sig10(r.achieved_outage) << ',' << sig10(r.mean_ru) << ','
            << sig10(r.ru_ratio_vs_genie) << ',' << sig10(r.quantile_coverage) << ',' << r.slots << ','
            << r.seed << '\n';
    }
}

json to_json(std::span<const ResultRow> rows, const RunManifest& manifest)
{
    json records = json::array();
    for (const auto& r : rows) {
        records.push_back({
            {"scenario", r.scenario},
            {"predictor", r.predictor},
            {"eta", r.eta ? json(*r.eta) : json(nullptr)},
            {"target_error", r.target_error},
            {"achieved_outage", r.achieved_outage},
            {"mean_ru", r.mean_ru},
            {"ru_ratio_vs_genie", r.ru_ratio_vs_genie},
            {"quantile_coverage", r.quantile_coverage},
            {"slots", r.slots},
            {"seed", r.seed},
        });
    }
    return json{{"manifest", manifest.deterministic_json()}, {"results", std::move(records)}};
}

std::vector<ResultRow> rows_from_json(const json& doc)
{
    std::vector<ResultRow> rows;
    for (const auto& rec : doc.at("results")) {
        ResultRow r;
        r.scenario = rec.at("scenario").get<std::string>();
        r.predictor = rec.at("predictor").get<std::string>();
        if (!rec.at("eta").is_null())
            r.eta = rec.at("eta").get<double>();
        r.target_error = rec.at("target_error").get<double>();
        r.achieved_outage = rec.at("achieved_outage").get<double>();
        r.mean_ru = rec.at("mean_ru").get<double>();
        r.ru_ratio_vs_genie = rec.at("ru_ratio_vs_genie").get<double>();
        r.quantile_coverage = rec.at("quantile_coverage").get<double>();
        r.slots = rec.at("slots").get<std::uint64_t>();
        r.seed = rec.at("seed").get<std::uint64_t>();
        rows.push_back(std::move(r));
    }
    return rows;
}

void emit_results(const std::filesystem::path& path, OutputFormat format, std::span<const ResultRow> rows,
                  RunManifest manifest)
{
    const std::filesystem::path manifest_path = path.string() + ".manifest.json";
    manifest.outputs = {path.string(), manifest_path.string()};
    if (manifest.finished_at.empty())
        manifest.finished_at = utc_timestamp();

    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        if (format == OutputFormat::csv)
            write_csv(out, rows);
        else
            out << to_json(rows, manifest).dump(2) << '\n';
        if (!out)
            throw std::runtime_error("write failed for '" + path.string() + "'");
    }

    std::ofstream side(manifest_path, std::ios::binary);
    if (!side)
        throw std::runtime_error("cannot write '" + manifest_path.string() + "'");
    side << manifest.full_json().dump(2) << '\n';
    if (!side)
        throw std::runtime_error("write failed for '" + manifest_path.string() + "'");
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace ipred
