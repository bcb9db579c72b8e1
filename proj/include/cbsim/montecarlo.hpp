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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cbsim/lifetime.hpp"

namespace cbsim {

struct RoundAggregate {
    std::size_t round = 0;
    double alive_fraction = 0.0;
    double snr_db = 0.0;  ///< per-link SNR averaged over links, then runs
    double rate_bits = 0.0;
    double residual_total_j = 0.0;
    std::size_t surviving_runs = 0;
    std::vector<double> link_snr_db;  ///< NaN where no run has the link alive

    /// Exact comparison in which NaN equals NaN.
    friend bool operator==(const RoundAggregate& a, const RoundAggregate& b);
};

struct Distribution {
    double mean = 0.0;
    double stddev = 0.0;  ///< population
    double min = 0.0;
    double q10 = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
    double q90 = 0.0;
    double max = 0.0;

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// Linear-interpolation quantiles over the samples.
Distribution summarize(std::vector<double> samples);

struct RunSummary {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t lifetime = 0;
    WastedEnergy wasted{};
    DeathCause cause = DeathCause::none;

    friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct EnsembleResult {
    std::vector<RoundAggregate> rounds;
    Distribution lifetime{};
    Distribution wasted_percent{};
    double mean_wasted_j = 0.0;
    std::vector<RunSummary> runs;

    friend bool operator==(const EnsembleResult&, const EnsembleResult&) = default;
};

/// Reduces finished traces in run order.
EnsembleResult aggregate(const std::vector<LifetimeTrace>& traces,
                         const std::vector<std::uint64_t>& seeds, const AveragingConfig& averaging);

/// Seeds of runs 0..runs-1 derived from the master seed.
std::vector<std::uint64_t> ensemble_seeds(std::uint64_t master_seed, std::size_t runs);

/// Runs `runs` independent lifetimes on `workers` threads. The result does
/// not depend on the worker count. Throws InvalidConfig for runs == 0.
EnsembleResult run_ensemble(const ScenarioConfig& scenario, std::size_t runs,
                            std::uint64_t master_seed, std::size_t workers = 1);

struct ComparisonRow {
    std::string label;
    EnsembleResult result;
    double lifetime_ratio = 1.0;       ///< mean tau / mean tau of the baseline
    double paired_lifetime_ratio = 1.0;///< mean over runs of tau_i / tau_baseline_i
    double wasted_delta_pct = 0.0;     ///< mean eps_% minus the baseline's
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  ///< rows[0] is the baseline
};

/// Paired-seed ensembles of every scenario; ratios and deltas are relative
/// to the first. Throws InvalidConfig with fewer than two scenarios or
/// mismatched node counts.
ComparisonTable compare_strategies(const std::vector<ScenarioConfig>& scenarios,
                                   const std::vector<std::string>& labels, std::size_t runs,
                                   std::uint64_t master_seed, std::size_t workers = 1);

}  // namespace cbsim
