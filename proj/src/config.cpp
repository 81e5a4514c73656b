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

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ipred {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> known_keys{
    "scenario",      "mean_snr_db", "inr_range_db", "n_interferers", "payload_bits",
    "state_count",   "confidence",  "iir_alpha",    "correlation",   "learning_scale",
    "warmup_length", "measured_slots", "target_errors", "seed",      "predictor",
};

double get_number(const json& doc, const std::string& key)
{
    const auto& v = doc.at(key);
    if (!v.is_number())
        throw ValidationError(key, "expected a number");
    return v.get<double>();
}

std::uint64_t get_count(const json& doc, const std::string& key)
{
    const auto& v = doc.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ValidationError(key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

} // namespace

ScenarioConfig config_from_json(const json& doc)
{
    if (!doc.is_object())
        throw ValidationError("<root>", "config must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (!known_keys.contains(key))
            throw ValidationError(key, "unknown key");

    ScenarioConfig config;
    if (doc.contains("scenario")) {
        const auto& v = doc.at("scenario");
        if (!v.is_string() || !apply_scenario_preset(v.get<std::string>(), config))
            throw ValidationError("scenario", "unknown scenario preset");
    }
    if (doc.contains("mean_snr_db"))
        config.mean_snr_db = get_number(doc, "mean_snr_db");
    if (doc.contains("inr_range_db")) {
        const auto& v = doc.at("inr_range_db");
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
            throw ValidationError("inr_range_db", "expected [min_db, max_db]");
        config.inr_range_db = {v[0].get<double>(), v[1].get<double>()};
    }
    if (doc.contains("n_interferers"))
        config.n_interferers = get_count(doc, "n_interferers");
    if (doc.contains("payload_bits"))
        config.payload_bits = get_number(doc, "payload_bits");
    if (doc.contains("state_count"))
        config.state_count = get_count(doc, "state_count");
    if (doc.contains("confidence"))
        config.confidence = get_number(doc, "confidence");
    if (doc.contains("iir_alpha"))
        config.iir_alpha = get_number(doc, "iir_alpha");
    if (doc.contains("correlation"))
        config.correlation = get_number(doc, "correlation");
    if (doc.contains("learning_scale"))
        config.learning_scale = get_number(doc, "learning_scale");
    if (doc.contains("warmup_length"))
        config.warmup_length = get_count(doc, "warmup_length");
    if (doc.contains("measured_slots"))
        config.measured_slots = get_count(doc, "measured_slots");
    if (doc.contains("target_errors")) {
        const auto& v = doc.at("target_errors");
        if (!v.is_array())
            throw ValidationError("target_errors", "expected an array of numbers");
        config.target_errors.clear();
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_number())
                throw ValidationError("target_errors[" + std::to_string(k) + "]", "expected a number");
            config.target_errors.push_back(v[k].get<double>());
        }
    }
    if (doc.contains("seed"))
        config.seed = get_count(doc, "seed");
    if (doc.contains("predictor")) {
        const auto& v = doc.at("predictor");
        if (!v.is_string())
            throw ValidationError("predictor", "expected a string");
        try {
            config.predictor = parse_predictor_kind(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ValidationError("predictor", e.what());
        }
    }

    config.validate();
    return config;
}

ScenarioConfig parse_config_text(std::string_view text)
{
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        return config_from_json(json::object());
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("<root>", std::string("malformed JSON: ") + e.what());
    }
    return config_from_json(doc);
}

ScenarioConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

json config_to_json(const ScenarioConfig& config)
{
    return json{
        {"mean_snr_db", config.mean_snr_db},
        {"inr_range_db", {config.inr_range_db.min_db, config.inr_range_db.max_db}},
        {"n_interferers", config.n_interferers},
        {"payload_bits", config.payload_bits},
        {"state_count", config.state_count},
        {"confidence", config.confidence},
        {"iir_alpha", config.iir_alpha},
        {"correlation", config.correlation},
        {"learning_scale", config.learning_scale},
        {"warmup_length", config.warmup_length},
        {"measured_slots", config.measured_slots},
        {"target_errors", config.target_errors},
        {"seed", config.seed},
        {"predictor", std::string(to_string(config.predictor))},
    };
}

} // namespace ipred
