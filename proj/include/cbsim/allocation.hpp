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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cbsim/channel.hpp"

namespace cbsim {

/// Real beamforming amplitudes of a cluster: effective = scale * normalized.
struct WeightVector {
    std::vector<double> normalized;  ///< u_i in [0, 1]
    double scale = 0.0;              ///< w_max
    std::vector<double> effective;   ///< w_i
    unsigned quantization_levels = 0;

    /// Builds the vector with effective[i] = scale * normalized[i].
    static WeightVector from_normalized(std::vector<double> normalized, double scale,
                                        unsigned quantization_levels = 0);

    /// Splits explicit amplitudes into scale = max w_i and u = w / scale.
    static WeightVector from_effective(std::vector<double> effective);

    double total_power() const;
};

/// Mean and variance of the normalized weights (m_u, sigma_u^2).
struct NormalizedStats {
    double mean = 0.0;
    double variance = 0.0;
};

/// Residual-energy statistics of the alive nodes and their normalized image.
struct ReiStats {
    double mean = 0.0;      ///< m_e, joules
    double variance = 0.0;  ///< sigma_e^2, joules^2
    NormalizedStats normalized;
};

/// u_i = e_i / E_max. Throws InvalidConfig when capacity <= 0.
std::vector<double> cbpa_normalized_weights(std::span<const double> residuals, double capacity);

/// Population mean and variance of the residuals; std::nullopt when there is
/// no alive node left.
std::optional<ReiStats> rei_stats(std::span<const double> residuals, double capacity);

/// Population mean and variance of an already normalized weight vector.
std::optional<NormalizedStats> weight_stats(std::span<const double> normalized);

/// Average SNR of an n-node array whose weights are w_max * u with u
/// independent of the channel:
///   (w_max^2 / noise) [n (s_u + m_u^2)(s_a + m_a^2) + n (n - 1) m_u^2 m_a^2].
double analytic_average_snr(double scale, std::size_t n, const NormalizedStats& weights,
                            const ChannelStats& channel, double noise);

struct WmaxResult {
    double value = 0.0;
    bool exceeds_cap = false;  ///< value > sqrt(p_max)
};

/// Inverse of analytic_average_snr in the scale. Throws InfeasibleAllocation
/// when the denominator vanishes (every weight is zero).
WmaxResult compute_wmax(double target_snr, std::size_t n, const NormalizedStats& weights,
                        const ChannelStats& channel, double noise, double p_max);

/// Common amplitude of equal-power beamforming meeting the average target.
double cbepa_weight(double target_snr, std::size_t n, const ChannelStats& channel, double noise);

enum class QuantizationGrid {
    include_zero,  ///< {j / L : j = 0..L}
    exclude_zero,  ///< {j / L : j = 1..L}
};

/// Rounds each u_i to the nearest grid point, ties upward. levels == 0
/// leaves the weights continuous.
std::vector<double> quantize_weights(std::span<const double> normalized, unsigned levels,
                                     QuantizationGrid grid = QuantizationGrid::include_zero);

/// maximize (a^T w)^2  s.t.  sum w_i^2 = p_total, w_i^2 <= p_max.
///
/// The maximizer is the capped matched filter w_i = min(mu a_i, sqrt(p_max))
/// with mu set by bisection so the power equality holds. Throws
/// InfeasibleAllocation when p_total > n * p_max.
WeightVector solve_max_gain(std::span<const double> gains, double p_total, double p_max);

/// minimize ||w||^2  s.t.  (a^T w)^2 >= target_snr * noise, w_i^2 <= p_max.
///
/// Same capped matched filter with mu chosen so a^T w = sqrt(target * noise).
/// Throws InfeasibleAllocation when even every node at the cap falls short.
WeightVector solve_min_power(std::span<const double> gains, double target_snr, double noise,
                             double p_max);

/// Destination-driven w_max adjustment: the receiver reports the realized
/// SNR and the nodes step w_max up or down by a fixed ratio until the SNR is
/// inside the acceptance window or the cap stops further increase.
struct FeedbackParams {
    double step_db = 0.5;
    double window_db = 0.25;
    double p_max = 1.0;
    unsigned max_iterations = 200;
};

struct FeedbackResult {
    double wmax = 0.0;
    unsigned iterations = 0;
    bool converged = false;
    bool cap_reached = false;
};

FeedbackResult adjust_wmax(double initial_wmax, const std::function<double(double)>& realized_snr,
                           double target_snr, const FeedbackParams& params);

}  // namespace cbsim
