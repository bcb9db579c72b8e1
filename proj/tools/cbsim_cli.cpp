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

// Command-line front end: run one scenario, compare several on paired
// seeds, or list the bundled presets.

#include <cstdint>
#include <algorithm>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "cbsim/config.hpp"
#include "cbsim/errors.hpp"
#include "cbsim/montecarlo.hpp"
#include "cbsim/output.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_infeasible = 2;
constexpr int exit_io = 3;

struct CommonOptions {
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed;
    std::size_t workers = 1;
    std::string out = "cbsim-out";
};

void add_common(CLI::App* cmd, CommonOptions& opts)
{
    cmd->add_option("--out", opts.out, "Output directory")->capture_default_str();
    cmd->add_option("--runs", opts.runs, "Monte Carlo runs (overrides the config)");
    cmd->add_option("--seed", opts.seed, "Master seed (overrides the config)");
    cmd->add_option("--workers", opts.workers, "Worker threads, 0 = all cores")
        ->capture_default_str();
}

std::size_t resolve_workers(std::size_t requested)
{
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void print_summary(const std::string& label, const cbsim::EnsembleResult& r)
{
    fmt::print("{}: runs={} lifetime_mean_slots={:.2f} lifetime_std_slots={:.2f} "
               "wasted_mean_pct={:.2f}\n",
               label, r.runs.size(), r.lifetime.mean, r.lifetime.stddev, r.wasted_percent.mean);
}

int cmd_run(const std::string& config_path, const std::string& preset, const CommonOptions& opts)
{
    cbsim::ScenarioConfig config =
        config_path.empty() ? cbsim::find_preset(preset.empty() ? "paper-ex1-uniform" : preset).config
                            : cbsim::load_config(config_path);
    if (opts.runs) {
        config.runs = *opts.runs;
    }
    if (opts.seed) {
        config.master_seed = *opts.seed;
    }
    config.validate();

    const auto result =
        cbsim::run_ensemble(config, config.runs, config.master_seed, resolve_workers(opts.workers));
    cbsim::write_run_outputs(opts.out, config, result);
    print_summary(config_path.empty() ? (preset.empty() ? "paper-ex1-uniform" : preset) : config_path,
                  result);
    fmt::print("wrote {}\n", opts.out);
    return exit_ok;
}

int cmd_compare(const std::vector<std::string>& config_paths, const std::vector<std::string>& preset_names,
                const std::string& group, const CommonOptions& opts)
{
    std::vector<cbsim::ScenarioConfig> configs;
    std::vector<std::string> labels;
    if (!group.empty()) {
        for (const auto& name : cbsim::find_preset_group(group).members) {
            configs.push_back(cbsim::find_preset(name).config);
            labels.push_back(name);
        }
    }
    for (const auto& name : preset_names) {
        configs.push_back(cbsim::find_preset(name).config);
        labels.push_back(name);
    }
    for (const auto& path : config_paths) {
        configs.push_back(cbsim::load_config(path));
        std::string label = std::filesystem::path(path).stem().string();
        // Labels name output subdirectories, so they must be unique.
        for (std::size_t n = 2; std::find(labels.begin(), labels.end(), label) != labels.end(); ++n) {
            label = std::filesystem::path(path).stem().string() + "-" + std::to_string(n);
        }
        labels.push_back(label);
    }
    if (configs.size() < 2) {
        throw cbsim::InvalidConfig("compare: at least two scenarios are required");
    }

    const std::size_t runs = opts.runs.value_or(configs.front().runs);
    const std::uint64_t seed = opts.seed.value_or(configs.front().master_seed);
    for (auto& c : configs) {
        c.runs = runs;
        c.master_seed = seed;
    }
    const auto table =
        cbsim::compare_strategies(configs, labels, runs, seed, resolve_workers(opts.workers));
    cbsim::write_compare_outputs(opts.out, configs, table, runs, seed);
    for (const auto& row : table.rows) {
        print_summary(row.label, row.result);
        fmt::print("  lifetime_ratio={:.4f} paired_lifetime_ratio={:.4f} wasted_delta_pct={:+.2f}\n",
                   row.lifetime_ratio, row.paired_lifetime_ratio, row.wasted_delta_pct);
    }
    fmt::print("wrote {}\n", opts.out);
    return exit_ok;
}

int cmd_presets(const std::string& show)
{
    if (!show.empty()) {
        std::cout << cbsim::to_json(cbsim::find_preset(show).config).dump(2) << '\n';
        return exit_ok;
    }
    fmt::print("presets:\n");
    for (const auto& p : cbsim::presets()) {
        fmt::print("  {:<24} {}\n", p.name, p.description);
    }
    fmt::print("groups:\n");
    for (const auto& g : cbsim::preset_groups()) {
        fmt::print("  {:<24} {}\n", g.name, g.description);
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lifetime simulator for energy-aware collaborative beamforming clusters"};
    app.set_version_flag("--version", std::string(CBSIM_VERSION));
    app.require_subcommand(1);

    CommonOptions run_opts;
    std::string run_config;
    std::string run_preset;
    auto* run = app.add_subcommand("run", "Run a Monte Carlo ensemble of one scenario");
    auto* run_cfg_opt = run->add_option("--config", run_config, "Scenario config file (JSON)");
    run->add_option("--preset", run_preset, "Bundled preset name")->excludes(run_cfg_opt);
    add_common(run, run_opts);

    CommonOptions cmp_opts;
    std::vector<std::string> cmp_configs;
    std::vector<std::string> cmp_presets;
    std::string cmp_group;
    auto* compare = app.add_subcommand(
        "compare", "Compare scenarios on paired seeds; ratios are relative to the first");
    compare->add_option("--config", cmp_configs, "Scenario config file (repeatable)");
    compare->add_option("--preset", cmp_presets, "Bundled preset name (repeatable)");
    compare->add_option("--group", cmp_group, "Bundled preset group");
    add_common(compare, cmp_opts);

    std::string show;
    auto* list = app.add_subcommand("presets", "List bundled presets and groups");
    list->add_option("--show", show, "Print the resolved config of one preset");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(run_config, run_preset, run_opts);
        }
        if (compare->parsed()) {
            return cmd_compare(cmp_configs, cmp_presets, cmp_group, cmp_opts);
        }
        return cmd_presets(show);
    } catch (const cbsim::InfeasibleAllocation& e) {
        std::cerr << "infeasible allocation: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const cbsim::InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const cbsim::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_config;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    }
}
