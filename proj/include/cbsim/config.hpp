/*
 * Copyright 2026 The cbsim Authors
 * SPDX-License-Identifier: Apache-2.0
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cbsim/scenario.hpp"

#include "json.hpp"

namespace cbsim {

/// Scenario files are JSON objects (comments allowed) whose nested keys
/// mirror ScenarioConfig. An optional top-level "preset" names the base the
/// remaining keys override; without it the base is the default preset. A run
/// manifest is accepted as well, in which case its "config" member is used.
ScenarioConfig load_config(const std::filesystem::path& path);

ScenarioConfig parse_config(std::string_view text, const std::string& source = "<string>");

/// Applies the keys of `doc` on top of `base`. Unknown keys and constraint
/// violations throw InvalidConfig with the key path in the message.
ScenarioConfig apply_config(const nlohmann::json& doc, ScenarioConfig base);

/// Fully resolved configuration; apply_config(to_json(c), {}) == c.
nlohmann::json to_json(const ScenarioConfig& config);

struct Preset {
    std::string name;
    std::string description;
    ScenarioConfig config;
};

const std::vector<Preset>& presets();

/// Throws InvalidConfig for an unknown name.
const Preset& find_preset(std::string_view name);

/// Named lists of presets meant to be compared against each other.
struct PresetGroup {
    std::string name;
    std::string description;
    std::vector<std::string> members;
};

const std::vector<PresetGroup>& preset_groups();
const PresetGroup& find_preset_group(std::string_view name);

}  // namespace cbsim
