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
#include <optional>
#include <string>
#include <vector>

#include "cbsim/allocation.hpp"
#include "cbsim/energy.hpp"

namespace cbsim {

enum class StrategyKind { cb_epa, cb_pa, centralized_min_power, centralized_max_gain };

/// Node count entering the equal-power weight.
enum class EpaReference {
    initial,  ///< size of the cluster at deployment; the weight never changes
    alive,    ///< nodes still alive at the allocation round
};

/// Source of m_u and sigma_u^2 for the CB-PA scale.
enum class WeightStatsSource {
    quantized,  ///< statistics of the transmitted (quantized) normalized weights
    rei,        ///< m_e / E_max and sigma_e^2 / E_max^2 of the raw residuals
};

enum class WmaxMode {
    analytic,  ///< closed-form scale from the average-SNR expansion
    feedback,  ///< destination-driven step adjustment
};

struct Strategy {
    StrategyKind kind = StrategyKind::cb_pa;
    unsigned quantization_levels = 8;  ///< 0 = continuous weights
    std::size_t reallocation_period = 1;
    QuantizationGrid grid = QuantizationGrid::include_zero;
    EpaReference epa_reference = EpaReference::initial;
    WeightStatsSource weight_stats = WeightStatsSource::quantized;
    WmaxMode wmax_mode = WmaxMode::analytic;
    FeedbackParams feedback{};
};

struct DeathCriteria {
    double max_dead_fraction = 0.9;
    double snr_drop_db = 3.0;
};

enum class PartitionPolicy { round_robin, random };

/// How per-round ensemble means treat runs whose cluster has already died.
enum class AveragingConvention {
    surviving,  ///< average over runs still alive at the round
    zero_fill,  ///< dead runs contribute zero alive fraction, SNR and rate
};

enum class SnrAveraging { linear, db };

struct AveragingConfig {
    AveragingConvention convention = AveragingConvention::surviving;
    SnrAveraging snr_domain = SnrAveraging::linear;
};

struct DestinationConfig {
    std::size_t count = 1;                     ///< K
    double range_m = 1000.0;
    std::vector<double> azimuths_deg{0.0, 180.0};  ///< first `count` are used
};

/// Optional E_b/N_0 reporting: E_b/N_0 = (B / f_b) * SNR.
struct EbN0Config {
    double bandwidth_hz = 1.0;
    double bit_rate_bps = 1.0;
};

struct ScenarioConfig {
    std::size_t nodes = 100;
    double disk_radius_wavelengths = 250.0;
    double wavelength_m = 0.125;
    DestinationConfig destinations{};

    /// Exactly one of the two is set; the other follows from R = log2(1 + SNR).
    std::optional<double> target_rate_bits = 4.0;
    std::optional<double> target_snr_db{};

    double noise_db = -100.0;
    double pl0_db = 40.0;
    double d0_m = 1.0;
    double alpha = 2.0;
    double shadowing_sigma2_db = 16.0;
    double shadowing_db_divisor = 10.0;
    double phase_error_deg_bound = 5.0;
    std::size_t channel_redraw_period = 0;  ///< 0 = channel fixed for the run

    EnergyDistribution energy{};
    WastedNormalization wasted_normalization = WastedNormalization::distribution_mean;

    Strategy strategy{};
    DeathCriteria death{};
    PartitionPolicy partition = PartitionPolicy::round_robin;
    AveragingConfig averaging{};

    std::size_t runs = 200;
    std::uint64_t master_seed = 1;
    double t_slot_s = 1.0;
    double p_max = 1.0;
    std::size_t max_rounds = 1'000'000;
    std::optional<EbN0Config> ebn0{};

    /// Throws InvalidConfig naming the offending key.
    void validate() const;

    /// Target SNR of each link, linear. With a rate target the total rate is
    /// split evenly over the K links.
    double per_link_target_snr() const;
    double per_link_target_snr_db() const;

    LinkBudget link_budget() const;
};

const char* to_string(StrategyKind kind);
const char* to_string(EnergyKind kind);

}  // namespace cbsim
