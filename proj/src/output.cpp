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

#include "cbsim/output.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include <fmt/format.h>

#include "cbsim/channel.hpp"
#include "cbsim/config.hpp"
#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

std::string num(double v)
{
    return fmt::format("{:.10g}", v);
}

void write_distribution(std::string& header, std::string& row, const std::string& prefix,
                        const std::string& unit, const Distribution& d)
{
    const std::pair<const char*, double> fields[] = {
        {"mean", d.mean}, {"std", d.stddev}, {"min", d.min},       {"q10", d.q10},
        {"q25", d.q25},   {"median", d.median}, {"q75", d.q75}, {"q90", d.q90},
        {"max", d.max},
    };
    for (const auto& [name, value] : fields) {
        header += fmt::format("{}_{}_{},", prefix, name, unit);
        row += num(value) + ",";
    }
}

std::ofstream open_for_write(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path)
{
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

void ensure_dir(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string());
    }
}

}  // namespace

void write_rounds_csv(std::ostream& out, const EnsembleResult& result,
                      const ScenarioConfig& config)
{
    const std::size_t links = config.destinations.count;
    std::string header = "round,alive_fraction,snr_db,rate_bits,residual_total_j,surviving_runs";
    if (links > 1) {
        for (std::size_t k = 0; k < links; ++k) {
            header += fmt::format(",snr_db_link{}", k);
        }
    }
    const bool with_ebn0 = config.ebn0.has_value();
    const double ebn0_offset_db =
        with_ebn0 ? 10.0 * std::log10(config.ebn0->bandwidth_hz / config.ebn0->bit_rate_bps) : 0.0;
    if (with_ebn0) {
        header += ",ebn0_db";
    }
    out << header << '\n';

    for (const auto& r : result.rounds) {
        std::string line = fmt::format("{},{},{},{},{},{}", r.round, num(r.alive_fraction),
                                       num(r.snr_db), num(r.rate_bits), num(r.residual_total_j),
                                       r.surviving_runs);
        if (links > 1) {
            for (std::size_t k = 0; k < links; ++k) {
                line += "," + num(k < r.link_snr_db.size() ? r.link_snr_db[k] : std::nan(""));
            }
        }
        if (with_ebn0) {
            line += "," + num(r.snr_db + ebn0_offset_db);
        }
        out << line << '\n';
    }
}

void write_runs_csv(std::ostream& out, const EnsembleResult& result)
{
    out << "run,seed,lifetime_slots,wasted_j,wasted_pct,cause\n";
    for (const auto& r : result.runs) {
        out << fmt::format("{},{},{},{},{},{}\n", r.run, r.seed, r.lifetime, num(r.wasted.joules),
                           num(r.wasted.percent), to_string(r.cause));
    }
}

void write_summary_csv(std::ostream& out, const EnsembleResult& result)
{
    std::string header;
    std::string row;
    write_distribution(header, row, "lifetime", "slots", result.lifetime);
    write_distribution(header, row, "wasted", "pct", result.wasted_percent);
    header += "wasted_mean_j,runs";
    row += num(result.mean_wasted_j) + "," + std::to_string(result.runs.size());
    out << header << '\n' << row << '\n';
}

void write_comparison_csv(std::ostream& out, const ComparisonTable& table)
{
    out << "label,lifetime_mean_slots,lifetime_std_slots,lifetime_median_slots,wasted_mean_pct,"
           "lifetime_ratio,paired_lifetime_ratio,wasted_delta_pct\n";
    for (const auto& row : table.rows) {
        const auto& res = row.result;
        out << fmt::format("{},{},{},{},{},{},{},{}\n", row.label, num(res.lifetime.mean),
                           num(res.lifetime.stddev), num(res.lifetime.median),
                           num(res.wasted_percent.mean), num(row.lifetime_ratio),
                           num(row.paired_lifetime_ratio), num(row.wasted_delta_pct));
    }
}

nlohmann::json make_manifest(const ScenarioConfig& config, const std::vector<std::uint64_t>& seeds)
{
    const LinkBudget budget = config.link_budget();
    const double per_link_db = config.per_link_target_snr_db();
    const ChannelStats ch =
        lognormal_channel_stats(config.shadowing_sigma2_db, config.shadowing_db_divisor);

    nlohmann::json derived;
    derived["per_link_target_snr"] = config.per_link_target_snr();
    derived["per_link_target_snr_db"] = per_link_db;
    derived["path_loss_db"] = path_loss_db(budget);
    derived["required_tx_power_db"] = required_tx_power_db(budget, per_link_db);
    derived["effective_noise_power"] = effective_noise_power(budget);
    derived["channel_gain_mean"] = ch.mean;
    derived["channel_gain_variance"] = ch.variance;

    nlohmann::json manifest;
    manifest["artifact"] = "cbsim";
    manifest["version"] = CBSIM_VERSION;
    manifest["config"] = to_json(config);
    manifest["derived"] = std::move(derived);
    manifest["run_seeds"] = seeds;
    return manifest;
}

void write_run_outputs(const std::filesystem::path& dir, const ScenarioConfig& config,
                       const EnsembleResult& result)
{
    ensure_dir(dir);
    std::vector<std::uint64_t> seeds;
    seeds.reserve(result.runs.size());
    for (const auto& r : result.runs) {
        seeds.push_back(r.seed);
    }

    const auto rounds_path = dir / "rounds.csv";
    auto rounds = open_for_write(rounds_path);
    write_rounds_csv(rounds, result, config);
    finish(rounds, rounds_path);

    const auto runs_path = dir / "runs.csv";
    auto runs = open_for_write(runs_path);
    write_runs_csv(runs, result);
    finish(runs, runs_path);

    const auto summary_path = dir / "summary.csv";
    auto summary = open_for_write(summary_path);
    write_summary_csv(summary, result);
    finish(summary, summary_path);

    const auto manifest_path = dir / "manifest.json";
    auto manifest = open_for_write(manifest_path);
    manifest << make_manifest(config, seeds).dump(2) << '\n';
    finish(manifest, manifest_path);
}

void write_compare_outputs(const std::filesystem::path& dir,
                           const std::vector<ScenarioConfig>& configs,
                           const ComparisonTable& table, std::size_t runs,
                           std::uint64_t master_seed)
{
    ensure_dir(dir);
    if (configs.size() != table.rows.size()) {
        throw InvalidInput("write_compare_outputs: one config per comparison row required");
    }

    const auto cmp_path = dir / "comparison.csv";
    auto cmp = open_for_write(cmp_path);
    write_comparison_csv(cmp, table);
    finish(cmp, cmp_path);

    for (std::size_t i = 0; i < configs.size(); ++i) {
        write_run_outputs(dir / table.rows[i].label, configs[i], table.rows[i].result);
    }

    nlohmann::json manifest;
    manifest["artifact"] = "cbsim-compare";
    manifest["version"] = CBSIM_VERSION;
    manifest["runs"] = runs;
    manifest["master_seed"] = master_seed;
    manifest["scenarios"] = nlohmann::json::array();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        manifest["scenarios"].push_back({{"label", table.rows[i].label}, {"config", to_json(configs[i])}});
    }
    const auto manifest_path = dir / "manifest.json";
    auto out = open_for_write(manifest_path);
    out << manifest.dump(2) << '\n';
    finish(out, manifest_path);
}

}  // namespace cbsim
