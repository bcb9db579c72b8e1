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
#include <span>
#include <vector>

#include "cbsim/rng.hpp"

namespace cbsim {

/// Log-normal shadowing amplitudes toward one destination.
///
/// The dB fluctuation A_i ~ N(0, sigma2_db) maps to a_i = 10^(A_i / divisor).
/// The default divisor of 10 treats the dB value as a power ratio;
/// 20 gives the conventional amplitude mapping.
struct ChannelRealization {
    std::vector<double> gains;
    double shadowing_db_sigma2 = 0.0;
    double db_divisor = 10.0;
};

struct ChannelStats {
    double mean = 1.0;      ///< m_a
    double variance = 0.0;  ///< sigma_a^2
};

/// Per-node synchronization error of the carrier phase, radians.
struct PhaseErrorVector {
    std::vector<double> errors;
};

ChannelRealization sample_channel(std::size_t n, double sigma2_db, Engine& rng,
                                  double db_divisor = 10.0);

/// Analytic moments of a_i under the shadowing law.
ChannelStats lognormal_channel_stats(double sigma2_db, double db_divisor = 10.0);

/// Uniform errors on [-bound, bound].
PhaseErrorVector sample_phase_errors(std::size_t n, double bound_rad, Engine& rng);

/// |sum_i w_i a_i exp(j phase_i)|^2 / noise_power.
///
/// `phases` is the total residual phase of each contribution at the
/// receiver; passing an empty span treats all phases as zero. Throws
/// InvalidInput on length mismatch or non-positive noise.
double received_snr(std::span<const double> weights, std::span<const double> gains,
                    std::span<const double> phases, double noise_power);

double received_snr(std::span<const double> weights, const ChannelRealization& channel,
                    const PhaseErrorVector& phase_errors, double noise_power);

}  // namespace cbsim
