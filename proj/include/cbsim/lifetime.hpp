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
#include <functional>
#include <span>
#include <vector>

#include "cbsim/geometry.hpp"
#include "cbsim/scenario.hpp"

namespace cbsim {

/// Node-to-destination assignment. Sets are disjoint and cover every node.
struct ClusterPartition {
    std::vector<std::size_t> assignment;  ///< node index -> link index
    std::size_t links = 1;
    bool uneven = false;  ///< links does not divide the node count

    std::vector<std::size_t> members(std::size_t link) const;
};

/// round_robin deals nodes out in index order; random shuffles first. When
/// links does not divide n the last link absorbs the remainder. Throws
/// InvalidConfig for links == 0 or links > n.
ClusterPartition partition_cluster(std::size_t n, std::size_t links, PartitionPolicy policy,
                                   Engine& rng);

/// Shannon rate log2(1 + snr), bits/s/Hz.
double bit_rate(double snr);

/// Total rate of K links, one SNR per live link.
double bit_rate(std::span<const double> link_snrs);

/// E_b/N_0 = (bandwidth / bit_rate) * snr. Throws InvalidInput for a zero bit rate.
double ebn0_from_snr(double snr, double bandwidth_hz, double bit_rate_bps);

double to_db(double linear);
double from_db(double db);

enum class DeathCause { none, node_count, snr_drop, max_rounds };

const char* to_string(DeathCause cause);

struct DeathVerdict {
    bool dead = false;
    DeathCause cause = DeathCause::none;
};

/// Dead when more than `max_dead_fraction` of the nodes are depleted or the
/// realized SNR lies more than `snr_drop_db` below the nominal target.
DeathVerdict evaluate_death(double dead_fraction, double realized_snr,
                            const DeathCriteria& criteria, double nominal_snr_db);

struct RoundRecord {
    std::size_t round = 0;          ///< 1-based
    double alive_fraction = 1.0;
    std::vector<double> link_snr;   ///< linear; NaN for links already dead
    double total_rate = 0.0;        ///< bits/s/Hz over live links
    double residual_total = 0.0;    ///< joules

    friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct LifetimeTrace {
    std::vector<RoundRecord> rounds;
    std::size_t lifetime = 0;  ///< tau in slots; equals rounds.size()
    WastedEnergy wasted{};
    DeathCause cause = DeathCause::none;
    std::vector<std::size_t> link_lifetimes;
    std::vector<DeathCause> link_causes;
    bool far_field_ok = true;
    bool uneven_partition = false;

    /// Mean per-link SNR (linear) over live links of one round.
    static double mean_link_snr(const RoundRecord& record);
};

bool traces_identical(const LifetimeTrace& a, const LifetimeTrace& b);

struct NodeState {
    PolarPoint position;
    double residual = 0.0;
    double phase_error = 0.0;
    bool alive = true;
};

/// Per-round view handed to an observer after charging.
struct RoundSnapshot {
    std::size_t round = 0;
    std::span<const NodeState> nodes;
    std::span<const double> funded;
    double consumed = 0.0;
    double initial_total = 0.0;
};

using RoundObserver = std::function<void(const RoundSnapshot&)>;

/// Runs one cluster until its death criterion fires (all links dead in the
/// multi-link case) or max_rounds is reached.
///
/// Each round: reallocate on period boundaries over alive nodes, gate nodes
/// by fundability, evaluate the realized SNR of each link, charge energies,
/// then test every live link for death. Deterministic in (scenario, seed).
/// Throws InfeasibleAllocation when the first allocation cannot reach the
/// target under p_max.
LifetimeTrace run_lifetime(const ScenarioConfig& scenario, std::uint64_t seed,
                           const RoundObserver& observer = {});

}  // namespace cbsim
