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

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "cbsim/montecarlo.hpp"

#include "json.hpp"

namespace cbsim {

/// Per-round ensemble table. Columns: round, alive_fraction, snr_db,
/// rate_bits, residual_total_j, surviving_runs, then snr_db_link<k> when
/// there is more than one link and ebn0_db when E_b/N_0 reporting is on.
void write_rounds_csv(std::ostream& out, const EnsembleResult& result,
                      const ScenarioConfig& config);

/// One row per run: run, seed, lifetime_slots, wasted_j, wasted_pct, cause.
void write_runs_csv(std::ostream& out, const EnsembleResult& result);

/// Single-row lifetime and wasted-energy summary.
void write_summary_csv(std::ostream& out, const EnsembleResult& result);

void write_comparison_csv(std::ostream& out, const ComparisonTable& table);

/// Resolved config, derived link quantities, per-run seeds and version.
nlohmann::json make_manifest(const ScenarioConfig& config, const std::vector<std::uint64_t>& seeds);

/// Writes rounds.csv, runs.csv, summary.csv and manifest.json into `dir`.
/// Throws std::runtime_error when the directory cannot be written.
void write_run_outputs(const std::filesystem::path& dir, const ScenarioConfig& config,
                       const EnsembleResult& result);

void write_compare_outputs(const std::filesystem::path& dir,
                           const std::vector<ScenarioConfig>& configs,
                           const ComparisonTable& table, std::size_t runs,
                           std::uint64_t master_seed);

}  // namespace cbsim
