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

#include "cbsim/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

template <class F>
std::optional<NormalizedStats> running_stats(std::span<const double> xs, F&& map)
{
    if (xs.empty()) {
        return std::nullopt;
    }
    // Welford; population variance
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double x : xs) {
        const double v = map(x);
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
    }
    return NormalizedStats{mean, std::max(0.0, m2 / static_cast<double>(k))};
}

}  // namespace

WeightVector WeightVector::from_normalized(std::vector<double> normalized, double scale,
                                           unsigned quantization_levels)
{
    WeightVector w;
    w.effective.resize(normalized.size());
    std::transform(normalized.begin(), normalized.end(), w.effective.begin(),
                   [scale](double u) { return scale * u; });
    w.normalized = std::move(normalized);
    w.scale = scale;
    w.quantization_levels = quantization_levels;
    return w;
}

WeightVector WeightVector::from_effective(std::vector<double> effective)
{
    const double scale =
        effective.empty() ? 0.0 : *std::max_element(effective.begin(), effective.end());
    std::vector<double> u(effective.size(), 0.0);
    if (scale > 0.0) {
        std::transform(effective.begin(), effective.end(), u.begin(),
                       [scale](double w) { return std::min(1.0, w / scale); });
    }
    return from_normalized(std::move(u), scale);
}

double WeightVector::total_power() const
{
    return std::inner_product(effective.begin(), effective.end(), effective.begin(), 0.0);
}

std::vector<double> cbpa_normalized_weights(std::span<const double> residuals, double capacity)
{
    if (!(capacity > 0.0)) {
        throw InvalidConfig("cbpa_normalized_weights: capacity must be positive");
    }
    std::vector<double> u(residuals.size());
    std::transform(residuals.begin(), residuals.end(), u.begin(),
                   [capacity](double e) { return e / capacity; });
    return u;
}

std::optional<ReiStats> rei_stats(std::span<const double> residuals, double capacity)
{
    if (!(capacity > 0.0)) {
        throw InvalidConfig("rei_stats: capacity must be positive");
    }
    const auto raw = running_stats(residuals, [](double e) { return e; });
    if (!raw) {
        return std::nullopt;
    }
    ReiStats s;
    s.mean = raw->mean;
    s.variance = raw->variance;
    s.normalized.mean = s.mean / capacity;
    s.normalized.variance = s.variance / (capacity * capacity);
    return s;
}

std::optional<NormalizedStats> weight_stats(std::span<const double> normalized)
{
    return running_stats(normalized, [](double u) { return u; });
}

double analytic_average_snr(double scale, std::size_t n, const NormalizedStats& weights,
                            const ChannelStats& channel, double noise)
{
    const double nn = static_cast<double>(n);
    const double mu2 = weights.mean * weights.mean;
    const double ma2 = channel.mean * channel.mean;
    const double bracket = nn * (weights.variance + mu2) * (channel.variance + ma2) +
                           nn * (nn - 1.0) * mu2 * ma2;
    return scale * scale / noise * bracket;
}

WmaxResult compute_wmax(double target_snr, std::size_t n, const NormalizedStats& weights,
                        const ChannelStats& channel, double noise, double p_max)
{
    if (!(target_snr >= 0.0) || !(noise > 0.0) || n == 0) {
        throw InvalidInput("compute_wmax: need target >= 0, noise > 0 and n >= 1");
    }
    const double nn = static_cast<double>(n);
    const double mu2 = weights.mean * weights.mean;
    const double ma2 = channel.mean * channel.mean;
    const double denom = nn * (weights.variance * channel.variance + channel.variance * mu2 +
                               weights.variance * ma2) +
                         nn * nn * mu2 * ma2;
    if (!(denom > 0.0)) {
        throw InfeasibleAllocation(
            "compute_wmax: normalized weights are all zero, no scale reaches the target");
    }
    WmaxResult r;
    r.value = std::sqrt(target_snr * noise / denom);
    r.exceeds_cap = r.value > std::sqrt(p_max);
    return r;
}

double cbepa_weight(double target_snr, std::size_t n, const ChannelStats& channel, double noise)
{
    if (!(target_snr >= 0.0) || !(noise > 0.0) || n == 0) {
        throw InvalidInput("cbepa_weight: need target >= 0, noise > 0 and n >= 1");
    }
    const double nn = static_cast<double>(n);
    return std::sqrt(target_snr * noise /
                     (nn * channel.variance + nn * nn * channel.mean * channel.mean));
}

std::vector<double> quantize_weights(std::span<const double> normalized, unsigned levels,
                                     QuantizationGrid grid)
{
    std::vector<double> out(normalized.begin(), normalized.end());
    if (levels == 0) {
        return out;
    }
    const double l = static_cast<double>(levels);
    const double floor_level = grid == QuantizationGrid::include_zero ? 0.0 : 1.0;
    for (auto& u : out) {
        double j = std::floor(std::clamp(u, 0.0, 1.0) * l + 0.5);
        j = std::clamp(j, floor_level, l);
        u = j / l;
    }
    return out;
}

FeedbackResult adjust_wmax(double initial_wmax, const std::function<double(double)>& realized_snr,
                           double target_snr, const FeedbackParams& params)
{
    if (!(initial_wmax > 0.0) || !(target_snr > 0.0)) {
        throw InvalidInput("adjust_wmax: initial scale and target must be positive");
    }
    const double ratio = std::pow(10.0, params.step_db / 20.0);
    const double cap = std::sqrt(params.p_max);
    const double target_db = 10.0 * std::log10(target_snr);

    FeedbackResult r;
    r.wmax = std::min(initial_wmax, cap);
    for (; r.iterations <= params.max_iterations; ++r.iterations) {
        const double diff = 10.0 * std::log10(realized_snr(r.wmax)) - target_db;
        if (std::abs(diff) <= params.window_db) {
            r.converged = true;
            break;
        }
        if (diff < 0.0) {
            if (r.wmax >= cap) {
                r.cap_reached = true;
                break;
            }
            r.wmax = std::min(r.wmax * ratio, cap);
        } else {
            r.wmax /= ratio;
        }
    }
    return r;
}

}  // namespace cbsim
