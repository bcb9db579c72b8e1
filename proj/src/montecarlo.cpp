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

#include "cbsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "cbsim/errors.hpp"

namespace cbsim {

namespace {

double quantile(const std::vector<double>& sorted, double q)
{
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double mean_to_db(double sum, std::size_t count, SnrAveraging domain)
{
    if (count == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double m = sum / static_cast<double>(count);
    return domain == SnrAveraging::linear ? to_db(m) : m;
}

double snr_term(double linear, SnrAveraging domain)
{
    return domain == SnrAveraging::linear ? linear : to_db(linear);
}

}  // namespace

Distribution summarize(std::vector<double> samples)
{
    Distribution d;
    if (samples.empty()) {
        return d;
    }
    std::sort(samples.begin(), samples.end());
    double sum = 0.0;
    for (double x : samples) {
        sum += x;
    }
    d.mean = sum / static_cast<double>(samples.size());
    double ss = 0.0;
    for (double x : samples) {
        ss += (x - d.mean) * (x - d.mean);
    }
    d.stddev = std::sqrt(ss / static_cast<double>(samples.size()));
    d.min = samples.front();
    d.max = samples.back();
    d.q10 = quantile(samples, 0.10);
    d.q25 = quantile(samples, 0.25);
    d.median = quantile(samples, 0.50);
    d.q75 = quantile(samples, 0.75);
    d.q90 = quantile(samples, 0.90);
    return d;
}

bool operator==(const RoundAggregate& a, const RoundAggregate& b)
{
    const auto same = [](double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); };
    return a.round == b.round && a.alive_fraction == b.alive_fraction && same(a.snr_db, b.snr_db) &&
           a.rate_bits == b.rate_bits && a.residual_total_j == b.residual_total_j &&
           a.surviving_runs == b.surviving_runs &&
           std::equal(a.link_snr_db.begin(), a.link_snr_db.end(), b.link_snr_db.begin(),
                      b.link_snr_db.end(), same);
}

EnsembleResult aggregate(const std::vector<LifetimeTrace>& traces,
                         const std::vector<std::uint64_t>& seeds, const AveragingConfig& averaging)
{
    EnsembleResult out;
    std::size_t longest = 0;
    std::size_t links = 0;
    for (const auto& tr : traces) {
        longest = std::max(longest, tr.lifetime);
        if (!tr.rounds.empty()) {
            links = std::max(links, tr.rounds.front().link_snr.size());
        }
    }
    const bool zero_fill = averaging.convention == AveragingConvention::zero_fill;
    const auto domain = averaging.snr_domain;

    out.rounds.reserve(longest);
    for (std::size_t r = 0; r < longest; ++r) {
        RoundAggregate agg;
        agg.round = r + 1;
        double alive = 0.0;
        double snr = 0.0;
        double rate = 0.0;
        double residual = 0.0;
        std::size_t snr_count = 0;
        std::size_t count = 0;
        std::vector<double> link_sum(links, 0.0);
        std::vector<std::size_t> link_count(links, 0);
        for (const auto& tr : traces) {
            if (r < tr.rounds.size()) {
                const auto& rec = tr.rounds[r];
                ++agg.surviving_runs;
                ++count;
                alive += rec.alive_fraction;
                rate += rec.total_rate;
                residual += rec.residual_total;
                snr += snr_term(LifetimeTrace::mean_link_snr(rec), domain);
                ++snr_count;
                for (std::size_t k = 0; k < rec.link_snr.size(); ++k) {
                    if (!std::isnan(rec.link_snr[k])) {
                        link_sum[k] += snr_term(rec.link_snr[k], domain);
                        ++link_count[k];
                    }
                }
            } else if (zero_fill && !tr.rounds.empty()) {
                // dead run: nothing alive, nothing received; energy stays stranded.
                // A zero SNR has no dB value, so the dB average skips it.
                ++count;
                residual += tr.rounds.back().residual_total;
                if (domain == SnrAveraging::linear) {
                    ++snr_count;
                }
            }
        }
        const double c = static_cast<double>(std::max<std::size_t>(count, 1));
        agg.alive_fraction = alive / c;
        agg.rate_bits = rate / c;
        agg.residual_total_j = residual / c;
        agg.snr_db = mean_to_db(snr, snr_count, domain);
        agg.link_snr_db.resize(links);
        for (std::size_t k = 0; k < links; ++k) {
            agg.link_snr_db[k] = mean_to_db(link_sum[k], link_count[k], domain);
        }
        out.rounds.push_back(std::move(agg));
    }

    std::vector<double> lifetimes;
    std::vector<double> wasted;
    double wasted_j = 0.0;
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto& tr = traces[i];
        lifetimes.push_back(static_cast<double>(tr.lifetime));
        wasted.push_back(tr.wasted.percent);
        wasted_j += tr.wasted.joules;
        out.runs.push_back({i, i < seeds.size() ? seeds[i] : 0, tr.lifetime, tr.wasted, tr.cause});
    }
    out.lifetime = summarize(lifetimes);
    out.wasted_percent = summarize(wasted);
    out.mean_wasted_j = traces.empty() ? 0.0 : wasted_j / static_cast<double>(traces.size());
    return out;
}

std::vector<std::uint64_t> ensemble_seeds(std::uint64_t master_seed, std::size_t runs)
{
    std::vector<std::uint64_t> seeds(runs);
    for (std::size_t i = 0; i < runs; ++i) {
        seeds[i] = run_seed(master_seed, i);
    }
    return seeds;
}

EnsembleResult run_ensemble(const ScenarioConfig& scenario, std::size_t runs,
                            std::uint64_t master_seed, std::size_t workers)
{
    if (runs == 0) {
        throw InvalidConfig("runs: need at least one run");
    }
    const auto seeds = ensemble_seeds(master_seed, runs);
    std::vector<LifetimeTrace> traces(runs);
    std::vector<std::exception_ptr> errors(runs);

    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < runs; i = next++) {
            try {
                traces[i] = run_lifetime(scenario, seeds[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    workers = std::clamp<std::size_t>(workers, 1, runs);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return aggregate(traces, seeds, scenario.averaging);
}

ComparisonTable compare_strategies(const std::vector<ScenarioConfig>& scenarios,
                                   const std::vector<std::string>& labels, std::size_t runs,
                                   std::uint64_t master_seed, std::size_t workers)
{
    if (scenarios.size() < 2) {
        throw InvalidConfig("compare: need at least two scenarios");
    }
    for (const auto& sc : scenarios) {
        if (sc.nodes != scenarios.front().nodes) {
            throw InvalidConfig("compare: paired scenarios must share the node count");
        }
    }
    ComparisonTable table;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        ComparisonRow row;
        row.label = s < labels.size() ? labels[s] : "scenario" + std::to_string(s);
        row.result = run_ensemble(scenarios[s], runs, master_seed, workers);
        table.rows.push_back(std::move(row));
    }
    const auto& base = table.rows.front().result;
    for (auto& row : table.rows) {
        row.lifetime_ratio = base.lifetime.mean > 0.0 ? row.result.lifetime.mean / base.lifetime.mean
                                                      : std::numeric_limits<double>::quiet_NaN();
        row.wasted_delta_pct = row.result.wasted_percent.mean - base.wasted_percent.mean;
        double ratio_sum = 0.0;
        for (std::size_t i = 0; i < row.result.runs.size(); ++i) {
            ratio_sum += static_cast<double>(row.result.runs[i].lifetime) /
                         static_cast<double>(base.runs[i].lifetime);
        }
        row.paired_lifetime_ratio = ratio_sum / static_cast<double>(row.result.runs.size());
    }
    return table;
}

}  // namespace cbsim
