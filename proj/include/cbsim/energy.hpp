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

/// Battery bookkeeping of one cluster.
///
/// Invariants: 0 <= residual[i] <= initial[i] <= capacity; residual never
/// increases; once alive[i] is false the node neither transmits nor spends.
struct EnergyState {
    std::vector<double> initial;   ///< e_i(0), joules
    std::vector<double> residual;  ///< e_i(t), joules
    std::vector<bool> alive;
    double slot_length = 1.0;  ///< T, seconds
    double capacity = 1.0;     ///< E_max, joules

    static EnergyState fresh(std::vector<double> initial, double capacity, double slot_length);

    std::size_t size() const { return residual.size(); }
    std::size_t alive_count() const;
    double residual_total() const;
};

enum class EnergyKind { uniform, gaussian };

struct EnergyDistribution {
    EnergyKind kind = EnergyKind::uniform;
    double capacity = 1.0;        ///< E_max
    double mean = 0.5;            ///< m_e; for uniform it must be capacity / 2
    double gaussian_sigma = 0.15; ///< gaussian only

    /// Throws InvalidConfig when the parameters are inconsistent.
    void validate() const;
};

/// Uniform: i.i.d. U[0, E_max]. Gaussian: N(m_e, sigma^2) clamped to [0, E_max].
std::vector<double> sample_initial_energies(const EnergyDistribution& dist, std::size_t n,
                                            Engine& rng);

/// Energy drawn by the power amplifier over one slot: w^2 * T.
constexpr double slot_energy(double weight, double slot_length) {
    return weight * weight * slot_length;
}

/// Log-distance link budget, all powers in dB.
struct LinkBudget {
    double pl0_db = 40.0;
    double alpha = 2.0;
    double distance = 1000.0;  ///< metres
    double d0 = 1.0;           ///< metres
    double noise_db = -100.0;

    void validate() const;
};

double path_loss_db(const LinkBudget& budget);

/// P_Tx = P_Rx + PL0 + 10 alpha log10(d / d0) with P_Rx = target + noise.
double required_tx_power_db(const LinkBudget& budget, double target_snr_db);

/// Receiver noise referred back to the transmitter side of the path loss
/// (linear). Weights computed against this noise are transmit amplitudes.
double effective_noise_power(const LinkBudget& budget);

struct ChargeResult {
    std::vector<double> funded;            ///< weights actually transmitted
    std::vector<std::size_t> newly_dead;   ///< indices that died this round
    double consumed = 0.0;                 ///< joules drawn this round
};

/// Charges one transmission round in place.
///
/// A node whose residual cannot fund its full slot energy transmits nothing,
/// keeps its residual (it becomes wasted energy) and is marked dead. Weights
/// given to dead nodes are ignored. Throws InvalidInput on length mismatch.
ChargeResult charge_round(EnergyState& state, std::span<const double> weights);

enum class WastedNormalization {
    distribution_mean,  ///< N * m_e
    realized_total,     ///< sum_i e_i(0)
};

struct WastedEnergy {
    double joules = 0.0;
    double percent = 0.0;

    friend bool operator==(const WastedEnergy&, const WastedEnergy&) = default;
};

WastedEnergy wasted_energy(const EnergyState& state, double distribution_mean,
                           WastedNormalization normalization = WastedNormalization::distribution_mean);

}  // namespace cbsim
