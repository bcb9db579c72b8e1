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

#include <algorithm>

#include "cbsim/config.hpp"
#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

ScenarioConfig with_strategy(ScenarioConfig c, StrategyKind kind)
{
    c.strategy.kind = kind;
    return c;
}

ScenarioConfig gaussian(ScenarioConfig c)
{
    c.energy.kind = EnergyKind::gaussian;
    c.energy.mean = 0.5 * c.energy.capacity;
    c.energy.gaussian_sigma = 0.15 * c.energy.capacity;
    return c;
}

ScenarioConfig with_rate(ScenarioConfig c, double bits)
{
    c.target_rate_bits = bits;
    c.target_snr_db.reset();
    return c;
}

ScenarioConfig with_links(ScenarioConfig c, std::size_t k)
{
    c.destinations.count = k;
    return c;
}

ScenarioConfig with_levels(ScenarioConfig c, unsigned levels)
{
    c.strategy.quantization_levels = levels;
    return c;
}

std::vector<Preset> build_presets()
{
    // The defaults of ScenarioConfig are the reference setup: 100 nodes on a
    // 250-wavelength disk, 4 bits/s/Hz toward one destination 1 km away,
    // 16 dB^2 shadowing, +/-5 degree phase errors, CB-PA with 8 levels.
    const ScenarioConfig base{};
    return {
        {"paper-ex1-uniform", "CB-PA, uniform initial energies", base},
        {"paper-ex1-uniform-epa", "CB-EPA, uniform initial energies",
         with_strategy(base, StrategyKind::cb_epa)},
        {"paper-ex1-gaussian", "CB-PA, Gaussian initial energies", gaussian(base)},
        {"paper-ex1-gaussian-epa", "CB-EPA, Gaussian initial energies",
         with_strategy(gaussian(base), StrategyKind::cb_epa)},
        {"paper-ex2-single", "CB-PA single link, Gaussian energies", gaussian(base)},
        {"paper-ex2-multi", "CB-PA two links of 50 nodes (2 bits/s/Hz each), Gaussian energies",
         with_links(gaussian(base), 2)},
        {"paper-ex3-rate4", "CB-PA at 4 bits/s/Hz", with_rate(base, 4.0)},
        {"paper-ex3-rate3", "CB-PA at 3 bits/s/Hz", with_rate(base, 3.0)},
        {"paper-ex4-levels8", "CB-PA, weights quantized to 8 levels", with_levels(base, 8)},
        {"paper-ex4-levels4", "CB-PA, weights quantized to 4 levels", with_levels(base, 4)},
        {"paper-ex4-levels2", "CB-PA, weights quantized to 2 levels", with_levels(base, 2)},
        {"centralized-min-power", "centralized minimum-power baseline, uniform energies",
         with_strategy(base, StrategyKind::centralized_min_power)},
        {"centralized-max-gain", "centralized maximum-gain baseline, uniform energies",
         with_strategy(base, StrategyKind::centralized_max_gain)},
    };
}

}  // namespace

const std::vector<Preset>& presets()
{
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset& find_preset(std::string_view name)
{
    const auto& all = presets();
    const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == name; });
    if (it == all.end()) {
        throw InvalidConfig("preset: unknown preset '" + std::string(name) + "'");
    }
    return *it;
}

const std::vector<PresetGroup>& preset_groups()
{
    static const std::vector<PresetGroup> groups = {
        {"paper-ex1", "power allocation and initial energy distribution",
         {"paper-ex1-uniform-epa", "paper-ex1-uniform", "paper-ex1-gaussian-epa",
          "paper-ex1-gaussian"}},
        {"paper-ex2", "single-link versus two-link beamforming",
         {"paper-ex2-single", "paper-ex2-multi"}},
        {"paper-ex3", "4 versus 3 bits/s/Hz", {"paper-ex3-rate4", "paper-ex3-rate3"}},
        {"paper-ex4", "8, 4 and 2 quantization levels",
         {"paper-ex4-levels8", "paper-ex4-levels4", "paper-ex4-levels2"}},
    };
    return groups;
}

const PresetGroup& find_preset_group(std::string_view name)
{
    const auto& all = preset_groups();
    const auto it =
        std::find_if(all.begin(), all.end(), [&](const PresetGroup& g) { return g.name == name; });
    if (it == all.end()) {
        throw InvalidConfig("group: unknown preset group '" + std::string(name) + "'");
    }
    return *it;
}

}  // namespace cbsim
