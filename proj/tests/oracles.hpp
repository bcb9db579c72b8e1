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

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls into the library under test.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace cbsim::oracle {

/// Moments of 10^(A / divisor), A ~ N(0, sigma2_db), in long double.
struct LognormalMoments {
    long double mean;
    long double variance;
};

inline LognormalMoments lognormal_moments(long double sigma2_db, long double divisor)
{
    const long double s = std::sqrt(sigma2_db) * std::log(10.0L) / divisor;
    const long double s2 = s * s;
    return {std::exp(s2 / 2.0L), (std::exp(s2) - 1.0L) * std::exp(s2)};
}

/// w_max of the average-SNR expansion evaluated term by term in long double.
inline long double wmax_long_double(long double target, long double noise, long double n,
                                    long double m_u, long double s_u, long double m_a,
                                    long double s_a)
{
    const long double denom =
        n * (s_u * s_a + s_a * m_u * m_u + s_u * m_a * m_a) + n * n * m_u * m_u * m_a * m_a;
    return std::sqrt(target * noise / denom);
}

/// Calls visit(w) for every point of the grid {0, h, 2h, ..., cap} (cap
/// itself always included) over `dims` coordinates.
template <typename Visit>
void for_each_grid_point(std::size_t dims, double cap, double h, Visit&& visit)
{
    std::vector<double> axis;
    const auto steps = static_cast<std::size_t>(std::floor(cap / h));
    for (std::size_t j = 0; j <= steps; ++j) {
        axis.push_back(static_cast<double>(j) * h);
    }
    if (axis.back() < cap) {
        axis.push_back(cap);
    }
    std::vector<std::size_t> idx(dims, 0);
    std::vector<double> w(dims, 0.0);
    while (true) {
        for (std::size_t d = 0; d < dims; ++d) {
            w[d] = axis[idx[d]];
        }
        visit(w);
        std::size_t d = 0;
        while (d < dims && ++idx[d] == axis.size()) {
            idx[d] = 0;
            ++d;
        }
        if (d == dims) {
            return;
        }
    }
}

/// Best (a^T w)^2 over grid points with sum w^2 = p_total and w_i <= cap.
/// One coordinate at a time is solved from the power equality; the others
/// run over the grid.
inline double grid_max_gain(const std::vector<double>& a, double p_total, double p_max, double h)
{
    const std::size_t n = a.size();
    const double cap = std::sqrt(p_max);
    double best = -1.0;
    for (std::size_t solved = 0; solved < n; ++solved) {
        for_each_grid_point(n - 1, cap, h, [&](const std::vector<double>& free) {
            double power = 0.0;
            double gain = 0.0;
            for (std::size_t i = 0, f = 0; i < n; ++i) {
                if (i == solved) {
                    continue;
                }
                power += free[f] * free[f];
                gain += a[i] * free[f];
                ++f;
            }
            const double rest = p_total - power;
            if (rest < 0.0 || rest > p_max) {
                return;
            }
            gain += a[solved] * std::sqrt(rest);
            best = std::max(best, gain * gain);
        });
    }
    return best;
}

/// Least sum w^2 over grid points with a^T w = sqrt(target * noise) and
/// 0 <= w_i <= cap, solving one coordinate from the equality.
inline double grid_min_power(const std::vector<double>& a, double target, double noise,
                             double p_max, double h)
{
    const std::size_t n = a.size();
    const double cap = std::sqrt(p_max);
    const double need = std::sqrt(target * noise);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t solved = 0; solved < n; ++solved) {
        for_each_grid_point(n - 1, cap, h, [&](const std::vector<double>& free) {
            double power = 0.0;
            double gain = 0.0;
            for (std::size_t i = 0, f = 0; i < n; ++i) {
                if (i == solved) {
                    continue;
                }
                power += free[f] * free[f];
                gain += a[i] * free[f];
                ++f;
            }
            const double w = (need - gain) / a[solved];
            if (w < 0.0 || w > cap) {
                return;
            }
            best = std::min(best, power + w * w);
        });
    }
    return best;
}

/// Coefficient of determination of the least-squares line through (x, y).
inline double linear_r2(const std::vector<double>& x, const std::vector<double>& y)
{
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (syy == 0.0) {
        return 1.0;
    }
    return sxy * sxy / (sxx * syy);
}

/// Two-pass population mean and variance.
inline std::pair<double, double> two_pass_moments(const std::vector<double>& v)
{
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return {mean, ss / n};
}

}  // namespace cbsim::oracle
