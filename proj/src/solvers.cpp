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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cbsim/allocation.hpp"
#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

constexpr double bisection_tolerance = 1e-12;
constexpr int bisection_max_steps = 400;

void check_gains(std::span<const double> gains, const char* who)
{
    if (gains.empty()) {
        throw InvalidInput(std::string(who) + ": empty channel vector");
    }
    for (double a : gains) {
        if (!(a > 0.0)) {
            throw InvalidInput(std::string(who) + ": channel gains must be positive");
        }
    }
}

std::vector<double> capped_matched_filter(std::span<const double> gains, double mu, double cap)
{
    std::vector<double> w(gains.size());
    std::transform(gains.begin(), gains.end(), w.begin(),
                   [=](double a) { return std::min(mu * a, cap); });
    return w;
}

// Upper end of the final bracket around the root, so f(mu) >= 0 for a non-decreasing f. The set
// of capped nodes only grows with mu, so f is continuous and monotone.
template <class F>
double bisect(F&& f, double mu_hi)
{
    double lo = 0.0;
    double hi = mu_hi;
    for (int step = 0; step < bisection_max_steps && hi - lo > bisection_tolerance * hi; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return hi;
}

}  // namespace

WeightVector solve_max_gain(std::span<const double> gains, double p_total, double p_max)
{
    check_gains(gains, "solve_max_gain");
    if (!(p_total >= 0.0) || !(p_max > 0.0)) {
        throw InvalidInput("solve_max_gain: powers must be non-negative");
    }
    const double n = static_cast<double>(gains.size());
    const double cap = std::sqrt(p_max);
    if (p_total > n * p_max * (1.0 + 1e-12)) {
        throw InfeasibleAllocation("solve_max_gain: total power exceeds n * p_max");
    }
    if (p_total >= n * p_max) {
        return WeightVector::from_effective(std::vector<double>(gains.size(), cap));
    }
    const double a_min = *std::min_element(gains.begin(), gains.end());
    const auto excess = [&](double mu) {
        double p = 0.0;
        for (double a : gains) {
            const double w = std::min(mu * a, cap);
            p += w * w;
        }
        return p - p_total;
    };
    const double mu = bisect(excess, cap / a_min);
    return WeightVector::from_effective(capped_matched_filter(gains, mu, cap));
}

WeightVector solve_min_power(std::span<const double> gains, double target_snr, double noise,
                             double p_max)
{
    check_gains(gains, "solve_min_power");
    if (!(target_snr >= 0.0) || !(noise > 0.0) || !(p_max > 0.0)) {
        throw InvalidInput("solve_min_power: need target >= 0, noise > 0, p_max > 0");
    }
    const double cap = std::sqrt(p_max);
    const double needed = std::sqrt(target_snr * noise);
    const double reachable = cap * std::accumulate(gains.begin(), gains.end(), 0.0);
    if (reachable < needed) {
        throw InfeasibleAllocation("solve_min_power: target SNR unreachable with every node at p_max");
    }
    const double a_min = *std::min_element(gains.begin(), gains.end());
    const auto shortfall = [&](double mu) {
        double s = 0.0;
        for (double a : gains) {
            s += a * std::min(mu * a, cap);
        }
        return s - needed;
    };
    const double mu = bisect(shortfall, cap / a_min);
    return WeightVector::from_effective(capped_matched_filter(gains, mu, cap));
}

}  // namespace cbsim
