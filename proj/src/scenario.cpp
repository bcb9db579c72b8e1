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

#include "cbsim/scenario.hpp"

#include <cmath>
#include <string>

#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

void require(bool ok, const std::string& key, const std::string& what)
{
    if (!ok) {
        throw InvalidConfig(key + ": " + what);
    }
}

}  // namespace

void ScenarioConfig::validate() const
{
    require(nodes >= 1, "nodes", "need at least one node");
    require(disk_radius_wavelengths > 0.0, "disk_radius_wavelengths", "must be positive");
    require(wavelength_m > 0.0, "wavelength_m", "must be positive");
    require(destinations.count >= 1, "destinations.count", "need at least one destination");
    require(destinations.count <= nodes, "destinations.count", "more links than nodes");
    require(destinations.azimuths_deg.size() >= destinations.count, "destinations.azimuths_deg",
            "one azimuth per destination required");
    require(destinations.range_m > 0.0, "destinations.range_m", "must be positive");
    require(target_rate_bits.has_value() != target_snr_db.has_value(), "target",
            "set exactly one of target_rate_bits and target_snr_db");
    if (target_rate_bits) {
        require(*target_rate_bits > 0.0 && std::isfinite(*target_rate_bits), "target_rate_bits",
                "must be positive");
    }
    if (target_snr_db) {
        require(std::isfinite(*target_snr_db), "target_snr_db", "must be finite");
    }
    require(std::isfinite(noise_db), "noise_db", "must be finite");
    require(std::isfinite(pl0_db), "pl0_db", "must be finite");
    require(shadowing_sigma2_db >= 0.0, "shadowing_sigma2_db", "must be non-negative");
    require(shadowing_db_divisor == 10.0 || shadowing_db_divisor == 20.0, "shadowing_db_divisor",
            "must be 10 or 20");
    require(phase_error_deg_bound >= 0.0 && phase_error_deg_bound < 180.0,
            "phase_error_deg_bound", "must lie in [0, 180)");
    energy.validate();
    link_budget().validate();
    require(strategy.reallocation_period >= 1, "strategy.period", "must be at least 1");
    const unsigned l = strategy.quantization_levels;
    require((l & (l - 1)) == 0 || l == 0, "strategy.levels", "must be 0 or a power of two");
    require(strategy.feedback.step_db > 0.0, "strategy.feedback.step_db", "must be positive");
    require(strategy.feedback.window_db > 0.0, "strategy.feedback.window_db", "must be positive");
    require(death.max_dead_fraction > 0.0 && death.max_dead_fraction <= 1.0,
            "death.max_dead_fraction", "must lie in (0, 1]");
    require(death.snr_drop_db > 0.0, "death.snr_drop_db", "must be positive");
    require(runs >= 1, "runs", "need at least one run");
    require(t_slot_s > 0.0, "t_slot_s", "must be positive");
    require(p_max > 0.0, "p_max", "must be positive");
    require(max_rounds >= 1, "max_rounds", "must be at least 1");
    if (ebn0) {
        require(ebn0->bandwidth_hz > 0.0, "ebn0.bandwidth_hz", "must be positive");
        require(ebn0->bit_rate_bps > 0.0, "ebn0.bit_rate_bps", "must be positive");
    }
}

double ScenarioConfig::per_link_target_snr() const
{
    if (target_rate_bits) {
        const double per_link = *target_rate_bits / static_cast<double>(destinations.count);
        return std::exp2(per_link) - 1.0;
    }
    return std::pow(10.0, target_snr_db.value_or(0.0) / 10.0);
}

double ScenarioConfig::per_link_target_snr_db() const
{
    return 10.0 * std::log10(per_link_target_snr());
}

LinkBudget ScenarioConfig::link_budget() const
{
    return {pl0_db, alpha, destinations.range_m, d0_m, noise_db};
}

const char* to_string(StrategyKind kind)
{
    switch (kind) {
    case StrategyKind::cb_epa: return "cb_epa";
    case StrategyKind::cb_pa: return "cb_pa";
    case StrategyKind::centralized_min_power: return "centralized_min_power";
    case StrategyKind::centralized_max_gain: return "centralized_max_gain";
    }
    return "?";
}

const char* to_string(EnergyKind kind)
{
    return kind == EnergyKind::uniform ? "uniform" : "gaussian";
}

}  // namespace cbsim
