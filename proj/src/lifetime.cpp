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

#include "cbsim/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cbsim/errors.hpp"

namespace cbsim {

std::vector<std::size_t> ClusterPartition::members(std::size_t link) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] == link) {
            out.push_back(i);
        }
    }
    return out;
}

ClusterPartition partition_cluster(std::size_t n, std::size_t links, PartitionPolicy policy,
                                   Engine& rng)
{
    if (links == 0 || links > n) {
        throw InvalidConfig("partition_cluster: need 1 <= links <= nodes");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (policy == PartitionPolicy::random && links > 1) {
        std::shuffle(order.begin(), order.end(), rng);
    }
    ClusterPartition p;
    p.links = links;
    p.assignment.assign(n, 0);
    p.uneven = n % links != 0;
    const std::size_t dealt = links * (n / links);
    for (std::size_t pos = 0; pos < n; ++pos) {
        p.assignment[order[pos]] = pos < dealt ? pos % links : links - 1;
    }
    return p;
}

double bit_rate(double snr)
{
    return std::log2(1.0 + snr);
}

double bit_rate(std::span<const double> link_snrs)
{
    double total = 0.0;
    for (double s : link_snrs) {
        total += bit_rate(s);
    }
    return total;
}

double ebn0_from_snr(double snr, double bandwidth_hz, double bit_rate_bps)
{
    if (bit_rate_bps == 0.0) {
        throw InvalidInput("ebn0_from_snr: bit rate must be non-zero");
    }
    return bandwidth_hz / bit_rate_bps * snr;
}

double to_db(double linear)
{
    return 10.0 * std::log10(linear);
}

double from_db(double db)
{
    return std::pow(10.0, db / 10.0);
}

const char* to_string(DeathCause cause)
{
    switch (cause) {
    case DeathCause::none: return "none";
    case DeathCause::node_count: return "node_count";
    case DeathCause::snr_drop: return "snr_drop";
    case DeathCause::max_rounds: return "max_rounds";
    }
    return "?";
}

DeathVerdict evaluate_death(double dead_fraction, double realized_snr,
                            const DeathCriteria& criteria, double nominal_snr_db)
{
    if (dead_fraction > criteria.max_dead_fraction) {
        return {true, DeathCause::node_count};
    }
    if (to_db(realized_snr) < nominal_snr_db - criteria.snr_drop_db) {
        return {true, DeathCause::snr_drop};
    }
    return {};
}

double LifetimeTrace::mean_link_snr(const RoundRecord& record)
{
    double sum = 0.0;
    std::size_t live = 0;
    for (double s : record.link_snr) {
        if (!std::isnan(s)) {
            sum += s;
            ++live;
        }
    }
    return live == 0 ? 0.0 : sum / static_cast<double>(live);
}

namespace {

bool same_double(double a, double b)
{
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

}  // namespace

bool traces_identical(const LifetimeTrace& a, const LifetimeTrace& b)
{
    if (a.lifetime != b.lifetime || a.cause != b.cause || a.rounds.size() != b.rounds.size() ||
        a.wasted.joules != b.wasted.joules || a.wasted.percent != b.wasted.percent ||
        a.link_lifetimes != b.link_lifetimes || a.link_causes != b.link_causes) {
        return false;
    }
    for (std::size_t r = 0; r < a.rounds.size(); ++r) {
        const auto& x = a.rounds[r];
        const auto& y = b.rounds[r];
        if (x.round != y.round || x.alive_fraction != y.alive_fraction ||
            x.total_rate != y.total_rate || x.residual_total != y.residual_total ||
            x.link_snr.size() != y.link_snr.size()) {
            return false;
        }
        for (std::size_t k = 0; k < x.link_snr.size(); ++k) {
            if (!same_double(x.link_snr[k], y.link_snr[k])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct Link {
    std::vector<std::size_t> members;
    Destination destination;
    ChannelRealization channel;  // gains toward this destination, all nodes
    std::vector<double> phases;  // residual phase of every node at this destination
    Engine redraw_rng;
    double target = 0.0;
    double nominal_db = 0.0;
    double wmax_state = 0.0;
    std::vector<double> weights;  // per member, last allocation
    bool alive = true;
    std::size_t lifetime = 0;
    DeathCause cause = DeathCause::none;
};

void check_structure(const ScenarioConfig& sc)
{
    if (sc.nodes == 0) {
        throw InvalidConfig("nodes: need at least one node");
    }
    if (sc.destinations.count == 0 || sc.destinations.count > sc.nodes ||
        sc.destinations.azimuths_deg.size() < sc.destinations.count) {
        throw InvalidConfig("destinations: need 1 <= count <= nodes and one azimuth per link");
    }
    if (sc.strategy.reallocation_period == 0) {
        throw InvalidConfig("strategy.period: must be at least 1");
    }
    if (sc.max_rounds == 0) {
        throw InvalidConfig("max_rounds: must be at least 1");
    }
    sc.energy.validate();
    sc.link_budget().validate();
}

class Simulation {
public:
    Simulation(const ScenarioConfig& sc, std::uint64_t seed)
        : sc_(sc)
        , cap_(std::sqrt(sc.p_max))
        , noise_(effective_noise_power(sc.link_budget()))
        , ch_stats_(lognormal_channel_stats(sc.shadowing_sigma2_db, sc.shadowing_db_divisor))
    {
        const std::size_t n = sc.nodes;
        auto deploy_rng = make_stream(seed, Stream::deployment);
        positions_ = deploy_cluster(n, sc.disk_radius_wavelengths, deploy_rng);

        auto part_rng = make_stream(seed, Stream::partition);
        const auto partition =
            partition_cluster(n, sc.destinations.count, sc.partition, part_rng);
        uneven_ = partition.uneven;

        auto phase_rng = make_stream(seed, Stream::phase);
        const double bound = sc.phase_error_deg_bound * std::numbers::pi / 180.0;
        errors_ = sample_phase_errors(n, bound, phase_rng);

        auto energy_rng = make_stream(seed, Stream::energy);
        state_ = EnergyState::fresh(sample_initial_energies(sc.energy, n, energy_rng),
                                    sc.energy.capacity, sc.t_slot_s);

        const double dest_rho = sc.destinations.range_m / sc.wavelength_m;
        const double target = sc.per_link_target_snr();
        for (std::size_t k = 0; k < sc.destinations.count; ++k) {
            Link link;
            link.members = partition.members(k);
            const double az = wrap_angle(sc.destinations.azimuths_deg[k] * std::numbers::pi / 180.0);
            link.destination = {{dest_rho, az}, k};
            auto ch_rng = make_stream(seed, Stream::channel, k);
            link.channel = sample_channel(n, sc.shadowing_sigma2_db, ch_rng, sc.shadowing_db_divisor);
            link.redraw_rng = make_stream(seed, Stream::channel_redraw, k);
            link.phases.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                link.phases[i] = residual_phase(positions_[i], link.destination) + errors_.errors[i];
            }
            link.target = target;
            link.nominal_db = to_db(target);
            link.weights.assign(link.members.size(), 0.0);
            far_field_ok_ = far_field_ok_ && far_field_holds(positions_, dest_rho);
            links_.push_back(std::move(link));
        }
        initial_total_ = state_.residual_total();
    }

    LifetimeTrace run(const RoundObserver& observer)
    {
        const std::size_t n = sc_.nodes;
        LifetimeTrace trace;
        trace.far_field_ok = far_field_ok_;
        trace.uneven_partition = uneven_;
        std::vector<double> weights(n, 0.0);
        std::vector<NodeState> snapshot_nodes;

        std::size_t t = 0;
        while (t < sc_.max_rounds && any_link_alive()) {
            ++t;
            if (sc_.channel_redraw_period > 0 && t > 1 &&
                (t - 1) % sc_.channel_redraw_period == 0) {
                for (auto& link : links_) {
                    link.channel = sample_channel(n, sc_.shadowing_sigma2_db, link.redraw_rng,
                                                  sc_.shadowing_db_divisor);
                }
            }
            const bool reallocate = (t - 1) % sc_.strategy.reallocation_period == 0;
            std::fill(weights.begin(), weights.end(), 0.0);
            for (auto& link : links_) {
                if (!link.alive) {
                    continue;
                }
                if (reallocate) {
                    allocate(link, t == 1);
                }
                for (std::size_t m = 0; m < link.members.size(); ++m) {
                    const std::size_t i = link.members[m];
                    weights[i] = state_.alive[i] ? link.weights[m] : 0.0;
                }
            }

            const ChargeResult charge = charge_round(state_, weights);

            RoundRecord rec;
            rec.round = t;
            rec.link_snr.assign(links_.size(), nan);
            for (std::size_t k = 0; k < links_.size(); ++k) {
                if (links_[k].alive) {
                    rec.link_snr[k] = link_snr(links_[k], charge.funded);
                    rec.total_rate += bit_rate(rec.link_snr[k]);
                }
            }
            rec.alive_fraction =
                static_cast<double>(state_.alive_count()) / static_cast<double>(n);
            rec.residual_total = state_.residual_total();

            for (std::size_t k = 0; k < links_.size(); ++k) {
                auto& link = links_[k];
                if (!link.alive) {
                    continue;
                }
                std::size_t dead = 0;
                for (std::size_t i : link.members) {
                    dead += state_.alive[i] ? 0 : 1;
                }
                const double dead_fraction =
                    static_cast<double>(dead) / static_cast<double>(link.members.size());
                const auto verdict =
                    evaluate_death(dead_fraction, rec.link_snr[k], sc_.death, link.nominal_db);
                if (verdict.dead) {
                    link.alive = false;
                    link.lifetime = t;
                    link.cause = verdict.cause;
                }
            }

            if (observer) {
                snapshot_nodes.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    snapshot_nodes[i] = {positions_[i], state_.residual[i], errors_.errors[i],
                                         static_cast<bool>(state_.alive[i])};
                }
                observer(RoundSnapshot{t, snapshot_nodes, charge.funded, charge.consumed,
                                       initial_total_});
            }
            trace.rounds.push_back(std::move(rec));
        }

        for (auto& link : links_) {
            if (link.alive) {
                link.lifetime = t;
                link.cause = DeathCause::max_rounds;
            }
            trace.link_lifetimes.push_back(link.lifetime);
            trace.link_causes.push_back(link.cause);
        }
        trace.lifetime = trace.rounds.size();
        trace.cause = final_cause();
        trace.wasted = wasted_energy(state_, sc_.energy.mean, sc_.wasted_normalization);
        return trace;
    }

private:
    bool any_link_alive() const
    {
        return std::any_of(links_.begin(), links_.end(), [](const Link& l) { return l.alive; });
    }

    DeathCause final_cause() const
    {
        const Link* last = &links_.front();
        for (const auto& link : links_) {
            if (link.lifetime > last->lifetime) {
                last = &link;
            }
        }
        return last->cause;
    }

    double link_snr(const Link& link, std::span<const double> funded) const
    {
        std::vector<double> w;
        std::vector<double> a;
        std::vector<double> ph;
        w.reserve(link.members.size());
        a.reserve(link.members.size());
        ph.reserve(link.members.size());
        for (std::size_t i : link.members) {
            w.push_back(funded[i]);
            a.push_back(link.channel.gains[i]);
            ph.push_back(link.phases[i]);
        }
        return received_snr(w, a, ph, noise_);
    }

    [[noreturn]] void infeasible(const Link& link, const std::string& why) const
    {
        throw InfeasibleAllocation("link " + std::to_string(link.destination.index) +
                                   ": target SNR " + std::to_string(link.nominal_db) +
                                   " dB unreachable at the first allocation (" + why + ")");
    }

    void allocate(Link& link, bool first)
    {
        std::vector<std::size_t> alive_slots;  // positions within link.members
        for (std::size_t m = 0; m < link.members.size(); ++m) {
            if (state_.alive[link.members[m]]) {
                alive_slots.push_back(m);
            }
        }
        std::fill(link.weights.begin(), link.weights.end(), 0.0);
        if (alive_slots.empty()) {
            return;
        }
        const std::size_t n_alive = alive_slots.size();

        const auto epa_reference_weight = [&] {
            const std::size_t count = sc_.strategy.epa_reference == EpaReference::initial
                                          ? link.members.size()
                                          : n_alive;
            return cbepa_weight(link.target, count, ch_stats_, noise_);
        };

        switch (sc_.strategy.kind) {
        case StrategyKind::cb_epa: {
            double w = epa_reference_weight();
            if (w > cap_) {
                if (first) {
                    infeasible(link, "equal-power weight above sqrt(p_max)");
                }
                w = cap_;
            }
            for (std::size_t m : alive_slots) {
                link.weights[m] = w;
            }
            break;
        }
        case StrategyKind::cb_pa:
            allocate_cbpa(link, alive_slots, first);
            break;
        case StrategyKind::centralized_min_power: {
            std::vector<double> gains;
            for (std::size_t m : alive_slots) {
                gains.push_back(link.channel.gains[link.members[m]]);
            }
            try {
                const auto sol = solve_min_power(gains, link.target, noise_, sc_.p_max);
                for (std::size_t j = 0; j < alive_slots.size(); ++j) {
                    link.weights[alive_slots[j]] = sol.effective[j];
                }
            } catch (const InfeasibleAllocation& e) {
                if (first) {
                    infeasible(link, e.what());
                }
                for (std::size_t m : alive_slots) {
                    link.weights[m] = cap_;
                }
            }
            break;
        }
        case StrategyKind::centralized_max_gain: {
            const double w_ref = epa_reference_weight();
            if (first && w_ref > cap_) {
                infeasible(link, "reference power above p_max");
            }
            const double nn = static_cast<double>(n_alive);
            const double p_total = std::min(nn * w_ref * w_ref, nn * sc_.p_max);
            std::vector<double> gains;
            for (std::size_t m : alive_slots) {
                gains.push_back(link.channel.gains[link.members[m]]);
            }
            const auto sol = solve_max_gain(gains, p_total, sc_.p_max);
            for (std::size_t j = 0; j < alive_slots.size(); ++j) {
                link.weights[alive_slots[j]] = sol.effective[j];
            }
            break;
        }
        }
    }

    void allocate_cbpa(Link& link, const std::vector<std::size_t>& alive_slots, bool first)
    {
        const auto& st = sc_.strategy;
        std::vector<double> residuals;
        residuals.reserve(alive_slots.size());
        for (std::size_t m : alive_slots) {
            residuals.push_back(state_.residual[link.members[m]]);
        }
        const auto u = quantize_weights(cbpa_normalized_weights(residuals, state_.capacity),
                                        st.quantization_levels, st.grid);
        const NormalizedStats stats = st.weight_stats == WeightStatsSource::quantized
                                          ? *weight_stats(u)
                                          : rei_stats(residuals, state_.capacity)->normalized;
        double wmax = 0.0;
        try {
            const auto r = compute_wmax(link.target, alive_slots.size(), stats, ch_stats_, noise_,
                                        sc_.p_max);
            if (r.exceeds_cap && first) {
                infeasible(link, "w_max above sqrt(p_max)");
            }
            wmax = std::min(r.value, cap_);
        } catch (const InfeasibleAllocation& e) {
            if (first) {
                infeasible(link, e.what());
            }
            wmax = 0.0;
        }

        if (st.wmax_mode == WmaxMode::feedback && wmax > 0.0 && link.target > 0.0) {
            const double start = link.wmax_state > 0.0 ? link.wmax_state : wmax;
            std::vector<double> w(link.members.size(), 0.0);
            std::vector<double> a;
            std::vector<double> ph;
            for (std::size_t i : link.members) {
                a.push_back(link.channel.gains[i]);
                ph.push_back(link.phases[i]);
            }
            const auto snr_at = [&](double scale) {
                for (std::size_t j = 0; j < alive_slots.size(); ++j) {
                    w[alive_slots[j]] = scale * u[j];
                }
                return received_snr(w, a, ph, noise_);
            };
            FeedbackParams fp = st.feedback;
            fp.p_max = sc_.p_max;
            wmax = adjust_wmax(start, snr_at, link.target, fp).wmax;
            link.wmax_state = wmax;
        }

        for (std::size_t j = 0; j < alive_slots.size(); ++j) {
            link.weights[alive_slots[j]] = wmax * u[j];
        }
    }

    const ScenarioConfig& sc_;
    double cap_;
    double noise_;
    ChannelStats ch_stats_;
    std::vector<PolarPoint> positions_;
    PhaseErrorVector errors_;
    EnergyState state_;
    std::vector<Link> links_;
    double initial_total_ = 0.0;
    bool far_field_ok_ = true;
    bool uneven_ = false;
};

}  // namespace

LifetimeTrace run_lifetime(const ScenarioConfig& scenario, std::uint64_t seed,
                           const RoundObserver& observer)
{
    check_structure(scenario);
    Simulation sim(scenario, seed);
    return sim.run(observer);
}

}  // namespace cbsim
