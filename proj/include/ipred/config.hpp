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

#ifndef IPRED_CONFIG_HPP
#define IPRED_CONFIG_HPP

// JSON scenario configuration. Every key is optional; omitted keys keep the
// ScenarioConfig defaults. A "scenario" preset is applied first, so explicit
// keys override it. Unknown keys are rejected. See docs/config.md.

#include "ipred/engine.hpp"

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string_view>

namespace ipred {

/// Throws ValidationError (unknown key, wrong type, invariant violation).
ScenarioConfig config_from_json(const nlohmann::json& doc);

/// Parses a config file; an empty file yields the defaults.
/// Throws std::runtime_error if unreadable, ValidationError if invalid.
ScenarioConfig parse_config(const std::filesystem::path& path);

ScenarioConfig parse_config_text(std::string_view text);

/// Full snapshot; config_from_json(config_to_json(c)) == c.
nlohmann::json config_to_json(const ScenarioConfig& config);

} // namespace ipred

#endif // IPRED_CONFIG_HPP
