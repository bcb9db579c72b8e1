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

#include "cbsim/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cbsim/errors.hpp"

namespace cbsim {

EnergyState EnergyState::fresh(std::vector<double> initial, double capacity, double slot_length)
{
    EnergyState s;
    s.residual = initial;
    s.initial = std::move(initial);
    s.alive.assign(s.initial.size(), true);
    s.capacity = capacity;
    s.slot_length = slot_length;
    return s;
}

std::size_t EnergyState::alive_count() const
{
    return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

double EnergyState::residual_total() const
{
    return std::accumulate(residual.begin(), residual.end(), 0.0);
}

void EnergyDistribution::validate() const
{
    if (!(capacity > 0.0)) {
        throw InvalidConfig("energy.e_max: battery capacity must be positive");
    }
    if (!(mean > 0.0) || mean > capacity) {
        throw InvalidConfig("energy.mean: must satisfy 0 < mean <= e_max");
    }
    if (kind == EnergyKind::uniform && std::abs(mean - 0.5 * capacity) > 1e-12 * capacity) {
        throw InvalidConfig("energy.mean: uniform energies on [0, e_max] have mean e_max / 2");
    }
    if (kind == EnergyKind::gaussian && !(gaussian_sigma >= 0.0)) {
        throw InvalidConfig("energy.sigma: must be non-negative");
    }
}

std::vector<double> sample_initial_energies(const EnergyDistribution& dist, std::size_t n,
                                            Engine& rng)
{
    if (n == 0) {
        throw InvalidConfig("sample_initial_energies: need at least one node");
    }
    dist.validate();
    std::vector<double> out(n);
    switch (dist.kind) {
    case EnergyKind::uniform: {
        std::uniform_real_distribution<double> u(0.0, dist.capacity);
        for (auto& e : out) {
            e = u(rng);
        }
        break;
    }
    case EnergyKind::gaussian: {
        if (dist.gaussian_sigma == 0.0) {
            std::fill(out.begin(), out.end(), dist.mean);
            break;
        }
        std::normal_distribution<double> g(dist.mean, dist.gaussian_sigma);
        for (auto& e : out) {
            e = std::clamp(g(rng), 0.0, dist.capacity);
        }
        break;
    }
    }
    return out;
}

void LinkBudget::validate() const
{
    if (!(alpha > 0.0)) {
        throw InvalidConfig("alpha: path-loss exponent must be positive");
    }
    if (!(d0 > 0.0)) {
        throw InvalidConfig("d0_m: reference distance must be positive");
    }
    if (!(distance >= d0)) {
        throw InvalidConfig("destinations.range_m: distance must be at least d0");
    }
}

double path_loss_db(const LinkBudget& budget)
{
    return budget.pl0_db + 10.0 * budget.alpha * std::log10(budget.distance / budget.d0);
}

double required_tx_power_db(const LinkBudget& budget, double target_snr_db)
{
    const double p_rx = target_snr_db + budget.noise_db;
    return p_rx + path_loss_db(budget);
}

double effective_noise_power(const LinkBudget& budget)
{
    return std::pow(10.0, (budget.noise_db + path_loss_db(budget)) / 10.0);
}

ChargeResult charge_round(EnergyState& state, std::span<const double> weights)
{
    if (weights.size() != state.size()) {
        throw InvalidInput("charge_round: one weight per node expected");
    }
    ChargeResult res;
    res.funded.assign(weights.size(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!state.alive[i] || weights[i] == 0.0) {
            continue;
        }
        const double need = slot_energy(weights[i], state.slot_length);
        if (need > state.residual[i]) {
            state.alive[i] = false;
            res.newly_dead.push_back(i);
            continue;
        }
        state.residual[i] -= need;
        res.funded[i] = weights[i];
        res.consumed += need;
    }
    return res;
}

WastedEnergy wasted_energy(const EnergyState& state, double distribution_mean,
                           WastedNormalization normalization)
{
    WastedEnergy w;
    w.joules = state.residual_total();
    double denom = 0.0;
    switch (normalization) {
    case WastedNormalization::distribution_mean:
        denom = static_cast<double>(state.size()) * distribution_mean;
        break;
    case WastedNormalization::realized_total:
        denom = std::accumulate(state.initial.begin(), state.initial.end(), 0.0);
        break;
    }
    w.percent = denom > 0.0 ? 100.0 * w.joules / denom : 0.0;
    return w;
}

}  // namespace cbsim
