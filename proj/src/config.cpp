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

#include "cbsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

#include "cbsim/errors.hpp"

namespace cbsim {

using nlohmann::json;

namespace {

template <class E>
struct EnumName {
    E value;
    const char* name;
};

constexpr EnumName<StrategyKind> strategy_names[] = {
    {StrategyKind::cb_epa, "cb_epa"},
    {StrategyKind::cb_pa, "cb_pa"},
    {StrategyKind::centralized_min_power, "centralized_min_power"},
    {StrategyKind::centralized_max_gain, "centralized_max_gain"},
};
constexpr EnumName<EnergyKind> energy_names[] = {
    {EnergyKind::uniform, "uniform"},
    {EnergyKind::gaussian, "gaussian"},
};
constexpr EnumName<WastedNormalization> normalization_names[] = {
    {WastedNormalization::distribution_mean, "distribution_mean"},
    {WastedNormalization::realized_total, "realized_total"},
};
constexpr EnumName<QuantizationGrid> grid_names[] = {
    {QuantizationGrid::include_zero, "include_zero"},
    {QuantizationGrid::exclude_zero, "exclude_zero"},
};
constexpr EnumName<EpaReference> epa_names[] = {
    {EpaReference::initial, "initial"},
    {EpaReference::alive, "alive"},
};
constexpr EnumName<WeightStatsSource> stats_names[] = {
    {WeightStatsSource::quantized, "quantized"},
    {WeightStatsSource::rei, "rei"},
};
constexpr EnumName<WmaxMode> wmax_names[] = {
    {WmaxMode::analytic, "analytic"},
    {WmaxMode::feedback, "feedback"},
};
constexpr EnumName<PartitionPolicy> partition_names[] = {
    {PartitionPolicy::round_robin, "round_robin"},
    {PartitionPolicy::random, "random"},
};
constexpr EnumName<AveragingConvention> convention_names[] = {
    {AveragingConvention::surviving, "surviving"},
    {AveragingConvention::zero_fill, "zero_fill"},
};
constexpr EnumName<SnrAveraging> domain_names[] = {
    {SnrAveraging::linear, "linear"},
    {SnrAveraging::db, "db"},
};

template <class E, std::size_t N>
const char* name_of(const EnumName<E> (&table)[N], E value)
{
    for (const auto& e : table) {
        if (e.value == value) {
            return e.name;
        }
    }
    return "?";
}

// Reads one JSON object, remembering which keys were consumed so that the
// leftovers can be reported as unknown.
class Reader {
public:
    Reader(const json& obj, std::string path) : obj_(obj), path_(std::move(path))
    {
        if (!obj_.is_object()) {
            throw InvalidConfig(where() + "expected an object");
        }
    }

    bool has(const char* key) const { return obj_.contains(key); }

    template <class T>
    void get(const char* key, T& out)
    {
        if (!obj_.contains(key)) {
            return;
        }
        seen_.insert(key);
        const auto& v = obj_.at(key);
        if constexpr (std::is_unsigned_v<T>) {
            if (!v.is_number_unsigned()) {
                throw InvalidConfig(where(key) + "expected a non-negative integer (" + v.dump() + ")");
            }
        }
        try {
            out = v.get<T>();
        } catch (const json::exception&) {
            throw InvalidConfig(where(key) + "wrong type (" + v.dump() + ")");
        }
    }

    template <class T>
    void get_optional(const char* key, std::optional<T>& out)
    {
        if (!obj_.contains(key)) {
            return;
        }
        if (obj_.at(key).is_null()) {
            seen_.insert(key);
            out.reset();
            return;
        }
        T v{};
        get(key, v);
        out = v;
    }

    template <class E, std::size_t N>
    void get_enum(const char* key, const EnumName<E> (&table)[N], E& out)
    {
        if (!obj_.contains(key)) {
            return;
        }
        std::string s;
        get(key, s);
        for (const auto& e : table) {
            if (s == e.name) {
                out = e.value;
                return;
            }
        }
        std::string allowed;
        for (const auto& e : table) {
            allowed += allowed.empty() ? "" : ", ";
            allowed += e.name;
        }
        throw InvalidConfig(where(key) + "unknown value '" + s + "' (expected one of " + allowed + ")");
    }

    Reader child(const char* key)
    {
        seen_.insert(key);
        return Reader(obj_.at(key), path_.empty() ? key : path_ + "." + key);
    }

    void mark(const char* key) { seen_.insert(key); }

    void finish() const
    {
        for (const auto& [key, _] : obj_.items()) {
            if (!seen_.count(key)) {
                throw InvalidConfig(where(key.c_str()) + "unknown key");
            }
        }
    }

private:
    std::string where(const char* key = nullptr) const
    {
        std::string p = path_;
        if (key) {
            p += p.empty() ? key : std::string(".") + key;
        }
        return (p.empty() ? std::string("<root>") : p) + ": ";
    }

    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

bool is_manifest(const json& doc)
{
    return doc.is_object() && doc.contains("artifact") && doc.contains("config");
}

}  // namespace

ScenarioConfig apply_config(const json& doc, ScenarioConfig c)
{
    Reader r(doc, "");
    if (r.has("preset")) {
        std::string name;
        r.get("preset", name);
        c = find_preset(name).config;
    }

    r.get("nodes", c.nodes);
    r.get("disk_radius_wavelengths", c.disk_radius_wavelengths);
    r.get("wavelength_m", c.wavelength_m);
    if (r.has("destinations")) {
        auto d = r.child("destinations");
        d.get("count", c.destinations.count);
        d.get("range_m", c.destinations.range_m);
        d.get("azimuths_deg", c.destinations.azimuths_deg);
        d.finish();
    }

    const bool rate_given = r.has("target_rate_bits") && !doc.at("target_rate_bits").is_null();
    const bool snr_given = r.has("target_snr_db") && !doc.at("target_snr_db").is_null();
    if (rate_given && snr_given) {
        throw InvalidConfig("target: set exactly one of target_rate_bits and target_snr_db");
    }
    r.get_optional("target_rate_bits", c.target_rate_bits);
    r.get_optional("target_snr_db", c.target_snr_db);
    if (rate_given) {
        c.target_snr_db.reset();
    }
    if (snr_given) {
        c.target_rate_bits.reset();
    }

    r.get("noise_db", c.noise_db);
    r.get("pl0_db", c.pl0_db);
    r.get("d0_m", c.d0_m);
    r.get("alpha", c.alpha);
    r.get("shadowing_sigma2_db", c.shadowing_sigma2_db);
    r.get("shadowing_db_divisor", c.shadowing_db_divisor);
    r.get("phase_error_deg_bound", c.phase_error_deg_bound);
    r.get("channel_redraw_period", c.channel_redraw_period);

    if (r.has("energy")) {
        auto e = r.child("energy");
        e.get_enum("kind", energy_names, c.energy.kind);
        e.get("e_max", c.energy.capacity);
        e.get("sigma", c.energy.gaussian_sigma);
        if (e.has("mean")) {
            e.get("mean", c.energy.mean);
        } else if (c.energy.kind == EnergyKind::uniform) {
            c.energy.mean = 0.5 * c.energy.capacity;
        }
        e.get_enum("wasted_normalization", normalization_names, c.wasted_normalization);
        e.finish();
    }

    if (r.has("strategy")) {
        auto s = r.child("strategy");
        s.get_enum("kind", strategy_names, c.strategy.kind);
        s.get("levels", c.strategy.quantization_levels);
        s.get("period", c.strategy.reallocation_period);
        s.get_enum("grid", grid_names, c.strategy.grid);
        s.get_enum("epa_reference", epa_names, c.strategy.epa_reference);
        s.get_enum("weight_stats", stats_names, c.strategy.weight_stats);
        s.get_enum("wmax_mode", wmax_names, c.strategy.wmax_mode);
        if (s.has("feedback")) {
            auto f = s.child("feedback");
            f.get("step_db", c.strategy.feedback.step_db);
            f.get("window_db", c.strategy.feedback.window_db);
            f.get("max_iterations", c.strategy.feedback.max_iterations);
            f.finish();
        }
        s.finish();
    }

    if (r.has("death")) {
        auto d = r.child("death");
        d.get("fraction", c.death.max_dead_fraction);
        d.get("snr_drop_db", c.death.snr_drop_db);
        d.finish();
    }

    r.get_enum("partition", partition_names, c.partition);
    if (r.has("averaging")) {
        auto a = r.child("averaging");
        a.get_enum("convention", convention_names, c.averaging.convention);
        a.get_enum("snr_domain", domain_names, c.averaging.snr_domain);
        a.finish();
    }

    r.get("runs", c.runs);
    r.get("master_seed", c.master_seed);
    r.get("t_slot_s", c.t_slot_s);
    r.get("p_max", c.p_max);
    r.get("max_rounds", c.max_rounds);
    if (r.has("ebn0")) {
        if (doc.at("ebn0").is_null()) {
            r.mark("ebn0");
            c.ebn0.reset();
        } else {
            auto e = r.child("ebn0");
            EbN0Config cfg = c.ebn0.value_or(EbN0Config{});
            e.get("bandwidth_hz", cfg.bandwidth_hz);
            e.get("bit_rate_bps", cfg.bit_rate_bps);
            e.finish();
            c.ebn0 = cfg;
        }
    }
    r.finish();
    c.validate();
    return c;
}

ScenarioConfig parse_config(std::string_view text, const std::string& source)
{
    json doc;
    const bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) {
        doc = json::object();
    } else {
        try {
            doc = json::parse(text, nullptr, true, true);
        } catch (const json::parse_error& e) {
            throw InvalidConfig(source + ": parse error: " + e.what());
        }
    }
    if (is_manifest(doc)) {
        return apply_config(doc.at("config"), ScenarioConfig{});
    }
    return apply_config(doc, ScenarioConfig{});
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfig(path.string() + ": cannot open config file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str(), path.string());
    } catch (const InvalidConfig& e) {
        const std::string msg = e.what();
        if (msg.rfind(path.string(), 0) == 0) {
            throw;
        }
        throw InvalidConfig(path.string() + ": " + msg);
    }
}

json to_json(const ScenarioConfig& c)
{
    json j;
    j["nodes"] = c.nodes;
    j["disk_radius_wavelengths"] = c.disk_radius_wavelengths;
    j["wavelength_m"] = c.wavelength_m;
    j["destinations"] = {{"count", c.destinations.count},
                         {"range_m", c.destinations.range_m},
                         {"azimuths_deg", c.destinations.azimuths_deg}};
    j["target_rate_bits"] = c.target_rate_bits ? json(*c.target_rate_bits) : json(nullptr);
    j["target_snr_db"] = c.target_snr_db ? json(*c.target_snr_db) : json(nullptr);
    j["noise_db"] = c.noise_db;
    j["pl0_db"] = c.pl0_db;
    j["d0_m"] = c.d0_m;
    j["alpha"] = c.alpha;
    j["shadowing_sigma2_db"] = c.shadowing_sigma2_db;
    j["shadowing_db_divisor"] = c.shadowing_db_divisor;
    j["phase_error_deg_bound"] = c.phase_error_deg_bound;
    j["channel_redraw_period"] = c.channel_redraw_period;
    j["energy"] = {{"kind", name_of(energy_names, c.energy.kind)},
                   {"e_max", c.energy.capacity},
                   {"mean", c.energy.mean},
                   {"sigma", c.energy.gaussian_sigma},
                   {"wasted_normalization", name_of(normalization_names, c.wasted_normalization)}};
    j["strategy"] = {{"kind", name_of(strategy_names, c.strategy.kind)},
                     {"levels", c.strategy.quantization_levels},
                     {"period", c.strategy.reallocation_period},
                     {"grid", name_of(grid_names, c.strategy.grid)},
                     {"epa_reference", name_of(epa_names, c.strategy.epa_reference)},
                     {"weight_stats", name_of(stats_names, c.strategy.weight_stats)},
                     {"wmax_mode", name_of(wmax_names, c.strategy.wmax_mode)},
                     {"feedback",
                      {{"step_db", c.strategy.feedback.step_db},
                       {"window_db", c.strategy.feedback.window_db},
                       {"max_iterations", c.strategy.feedback.max_iterations}}}};
    j["death"] = {{"fraction", c.death.max_dead_fraction}, {"snr_drop_db", c.death.snr_drop_db}};
    j["partition"] = name_of(partition_names, c.partition);
    j["averaging"] = {{"convention", name_of(convention_names, c.averaging.convention)},
                      {"snr_domain", name_of(domain_names, c.averaging.snr_domain)}};
    j["runs"] = c.runs;
    j["master_seed"] = c.master_seed;
    j["t_slot_s"] = c.t_slot_s;
    j["p_max"] = c.p_max;
    j["max_rounds"] = c.max_rounds;
    if (c.ebn0) {
        j["ebn0"] = {{"bandwidth_hz", c.ebn0->bandwidth_hz}, {"bit_rate_bps", c.ebn0->bit_rate_bps}};
    } else {
        j["ebn0"] = nullptr;
    }
    return j;
}

}  // namespace cbsim
