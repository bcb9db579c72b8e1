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

#include <cmath>
#include <string>

#include "doctest.h"

#include "cbsim/config.hpp"
#include "cbsim/errors.hpp"
#include "cbsim/montecarlo.hpp"
#include "cbsim/output.hpp"

using namespace cbsim;

namespace {

std::string config_error(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const InvalidConfig& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("reference preset values")
{
    const auto& c = find_preset("paper-ex1-uniform").config;
    CHECK(c.nodes == 100);
    CHECK(c.per_link_target_snr_db() == doctest::Approx(11.76).epsilon(1e-3));
    CHECK(c.shadowing_sigma2_db == 16.0);
    CHECK(c.strategy.quantization_levels == 8);
    CHECK(c.phase_error_deg_bound == 5.0);
    CHECK(c.disk_radius_wavelengths == 250.0);
    CHECK(c.strategy.kind == StrategyKind::cb_pa);
    CHECK(std::abs(required_tx_power_db(c.link_budget(), 11.76) - 11.76) < 1e-9);
}

TEST_CASE("every preset validates and every group names known presets")
{
    for (const auto& p : presets()) {
        CHECK_NOTHROW(p.config.validate());
    }
    for (const auto& g : preset_groups()) {
        CHECK(g.members.size() >= 2);
        for (const auto& m : g.members) {
            CHECK_NOTHROW(find_preset(m));
        }
    }
    CHECK_THROWS_AS(find_preset("nope"), InvalidConfig);
    CHECK_THROWS_AS(find_preset_group("nope"), InvalidConfig);
    CHECK(find_preset("paper-ex2-multi").config.destinations.count == 2);
    CHECK(find_preset("paper-ex2-multi").config.per_link_target_snr() == doctest::Approx(3.0));
    CHECK(find_preset("paper-ex3-rate3").config.per_link_target_snr() == doctest::Approx(7.0));
    CHECK(find_preset("paper-ex4-levels2").config.strategy.quantization_levels == 2);
}

TEST_CASE("empty config resolves to the defaults")
{
    const ScenarioConfig defaults{};
    CHECK(to_json(parse_config("")) == to_json(defaults));
    CHECK(to_json(parse_config("{}")) == to_json(defaults));
    CHECK(to_json(parse_config("  \n")) == to_json(defaults));
    CHECK(to_json(defaults) == to_json(find_preset("paper-ex1-uniform").config));
}

TEST_CASE("config values override the defaults")
{
    const auto c = parse_config(R"({
        // comments are allowed
        "nodes": 40,
        "target_snr_db": 6.0,
        "energy": {"kind": "gaussian", "sigma": 0.1},
        "strategy": {"kind": "cb_epa", "levels": 4},
        "destinations": {"count": 2, "range_m": 500},
        "death": {"fraction": 0.8},
        "ebn0": {"bandwidth_hz": 2e6, "bit_rate_bps": 1e6}
    })");
    CHECK(c.nodes == 40);
    CHECK_FALSE(c.target_rate_bits.has_value());
    CHECK(*c.target_snr_db == 6.0);
    CHECK(c.energy.kind == EnergyKind::gaussian);
    CHECK(c.energy.gaussian_sigma == 0.1);
    CHECK(c.strategy.kind == StrategyKind::cb_epa);
    CHECK(c.strategy.quantization_levels == 4);
    CHECK(c.destinations.count == 2);
    CHECK(c.destinations.range_m == 500.0);
    CHECK(c.death.max_dead_fraction == 0.8);
    REQUIRE(c.ebn0);
    CHECK(c.ebn0->bandwidth_hz == 2e6);
}

TEST_CASE("config starting from a preset")
{
    const auto c = parse_config(R"({"preset": "paper-ex3-rate3", "runs": 7})");
    CHECK(*c.target_rate_bits == 3.0);
    CHECK(c.runs == 7);
}

TEST_CASE("config errors name the offending key")
{
    CHECK(config_error(R"({"alpha": -1})").find("alpha") != std::string::npos);
    CHECK(config_error(R"({"nodez": 3})").find("nodez") != std::string::npos);
    CHECK(config_error(R"({"strategy": {"kind": "best"}})").find("strategy.kind") !=
          std::string::npos);
    CHECK(config_error(R"({"strategy": {"levels": 3}})").find("strategy.levels") !=
          std::string::npos);
    CHECK(config_error(R"({"energy": {"bogus": 1}})").find("energy.bogus") != std::string::npos);
    CHECK(config_error(R"({"nodes": -4})").find("nodes") != std::string::npos);
    CHECK(config_error(R"({"nodes": "many"})").find("nodes") != std::string::npos);
    CHECK_FALSE(config_error(R"({"target_rate_bits": 4, "target_snr_db": 3})").empty());
    CHECK_FALSE(config_error(R"({"nodes": 0})").empty());
    CHECK_FALSE(config_error(R"({"shadowing_db_divisor": 15})").empty());
    CHECK_FALSE(config_error("{ not json").empty());
    CHECK_FALSE(config_error("[1, 2]").empty());
}

TEST_CASE("load_config reports the path")
{
    try {
        load_config("/nonexistent/cbsim.json");
        FAIL("expected an error");
    } catch (const InvalidConfig& e) {
        CHECK(std::string(e.what()).find("/nonexistent/cbsim.json") != std::string::npos);
    }
}

TEST_CASE("config survives a JSON round trip")
{
    for (const auto& p : presets()) {
        const auto back = parse_config(to_json(p.config).dump());
        CHECK(to_json(back) == to_json(p.config));
    }
}

TEST_CASE("manifest re-ingested reproduces the ensemble")
{
    auto c = find_preset("paper-ex1-gaussian").config;
    c.nodes = 30;
    c.target_rate_bits = 2.0;
    const auto first = run_ensemble(c, 10, 4);
    const auto manifest = make_manifest(c, ensemble_seeds(4, 10));
    CHECK(manifest.at("artifact") == "cbsim");
    CHECK(manifest.at("version") == CBSIM_VERSION);
    CHECK(manifest.at("run_seeds").size() == 10);
    const auto again = parse_config(manifest.dump(2));
    CHECK(to_json(again) == to_json(c));
    CHECK(run_ensemble(again, 10, 4) == first);
}
