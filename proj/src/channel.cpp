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

#include "cbsim/channel.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "cbsim/errors.hpp"

namespace cbsim {

ChannelRealization sample_channel(std::size_t n, double sigma2_db, Engine& rng,
                                  double db_divisor)
{
    if (!(sigma2_db >= 0.0)) {
        throw InvalidConfig("sample_channel: shadowing variance must be non-negative");
    }
    if (!(db_divisor > 0.0)) {
        throw InvalidConfig("sample_channel: dB divisor must be positive");
    }
    ChannelRealization ch;
    ch.shadowing_db_sigma2 = sigma2_db;
    ch.db_divisor = db_divisor;
    ch.gains.assign(n, 1.0);
    if (sigma2_db == 0.0) {
        return ch;
    }
    std::normal_distribution<double> shadow(0.0, std::sqrt(sigma2_db));
    for (auto& g : ch.gains) {
        g = std::pow(10.0, shadow(rng) / db_divisor);
    }
    return ch;
}

ChannelStats lognormal_channel_stats(double sigma2_db, double db_divisor)
{
    // a = exp(s * Z) with s = sigma_dB * ln(10) / divisor
    const double s = std::sqrt(sigma2_db) * std::numbers::ln10 / db_divisor;
    const double s2 = s * s;
    return {std::exp(0.5 * s2), std::expm1(s2) * std::exp(s2)};
}

PhaseErrorVector sample_phase_errors(std::size_t n, double bound_rad, Engine& rng)
{
    if (!(bound_rad >= 0.0)) {
        throw InvalidConfig("sample_phase_errors: bound must be non-negative");
    }
    PhaseErrorVector pe;
    pe.errors.assign(n, 0.0);
    if (bound_rad == 0.0) {
        return pe;
    }
    std::uniform_real_distribution<double> err(-bound_rad, bound_rad);
    for (auto& e : pe.errors) {
        e = err(rng);
    }
    return pe;
}

double received_snr(std::span<const double> weights, std::span<const double> gains,
                    std::span<const double> phases, double noise_power)
{
    if (weights.size() != gains.size() || (!phases.empty() && phases.size() != gains.size())) {
        throw InvalidInput("received_snr: weight, gain and phase vectors differ in length");
    }
    if (!(noise_power > 0.0)) {
        throw InvalidInput("received_snr: noise power must be positive");
    }
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double amp = weights[i] * gains[i];
        if (phases.empty()) {
            sum += amp;
        } else {
            sum += amp * std::complex<double>(std::cos(phases[i]), std::sin(phases[i]));
        }
    }
    return std::norm(sum) / noise_power;
}

double received_snr(std::span<const double> weights, const ChannelRealization& channel,
                    const PhaseErrorVector& phase_errors, double noise_power)
{
    return received_snr(weights, channel.gains, phase_errors.errors, noise_power);
}

}  // namespace cbsim
