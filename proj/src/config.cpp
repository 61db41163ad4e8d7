// SPDX-License-Identifier: Apache-2.0
//
// nearsec - secure beam focusing for near-field hybrid MIMO transmitters
// Copyright (C) 2026 The nearsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearsec/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "nearsec/error.hpp"
#include "nearsec/metrics.hpp"

namespace nearsec {

double SystemConfig::noise_power() const { return dbm_to_watts(noise_dbm); }
double SystemConfig::p_max() const { return dbm_to_watts(p_max_dbm); }

PolarLocation SystemConfig::user_location() const {
    return {user_distance_m, deg2rad(user_azimuth_deg)};
}
PolarLocation SystemConfig::eve_location() const {
    return {eve_distance_m, deg2rad(eve_azimuth_deg)};
}
ArrayGeometry SystemConfig::tx_array() const { return ula_at_origin(num_tx, spacing_m); }
ArrayGeometry SystemConfig::user_array() const {
    return ula_at(num_rx_user, spacing_m, user_location());
}
ArrayGeometry SystemConfig::eve_array() const {
    return ula_at(num_rx_eve, spacing_m, eve_location());
}

void SystemConfig::validate() const {
    std::vector<std::string> errs;
    auto check = [&](bool ok, std::string msg) {
        if (!ok) errs.push_back(std::move(msg));
    };
    check(f_hz > 0.0, "f_hz must be positive");
    check(spacing_m > 0.0, "spacing_m must be positive");
    check(num_tx >= 1, "num_tx must be >= 1");
    check(num_rx_user >= 1, "num_rx_user must be >= 1");
    check(num_rx_eve >= 1, "num_rx_eve must be >= 1");
    check(num_streams >= 1, "num_streams must be >= 1");
    check(num_streams <= num_rf_chains, "num_streams must not exceed num_rf_chains");
    check(num_rf_chains <= num_tx, "num_rf_chains must not exceed num_tx");
    check(std::isfinite(noise_dbm), "noise_dbm must be finite");
    check(std::isfinite(p_max_dbm), "p_max_dbm must be finite");
    check(user_distance_m > 0.0, "user_distance_m must be positive");
    check(eve_distance_m > 0.0, "eve_distance_m must be positive");
    check(std::abs(user_azimuth_deg) < 90.0, "user_azimuth_deg must lie in (-90, 90)");
    check(std::abs(eve_azimuth_deg) < 90.0, "eve_azimuth_deg must lie in (-90, 90)");
    check(trials >= 1, "trials must be >= 1");
    check(eps1 > 0.0, "eps1 must be positive");
    check(eps2 > 0.0, "eps2 must be positive");
    check(eps3 > 0.0, "eps3 must be positive");
    check(max_bcd_iters >= 1, "max_bcd_iters must be >= 1");
    check(max_ao_iters >= 1, "max_ao_iters must be >= 1");
    if (errs.empty()) return;
    std::string msg = "invalid configuration:";
    for (const auto& e : errs) msg += " " + e + ";";
    msg.pop_back();
    throw ConfigError(msg);
}

SystemConfig desk_preset() { return SystemConfig{}; }

SystemConfig paper_preset() {
    SystemConfig c;
    c.num_tx = 256;
    c.trials = 100;
    return c;
}

const char* to_string(ChannelModel model) {
    return model == ChannelModel::kNearField ? "near" : "far";
}

ChannelModel parse_channel_model(const std::string& s) {
    if (s == "near") return ChannelModel::kNearField;
    if (s == "far") return ChannelModel::kFarField;
    throw ConfigError(fmt::format("channel_model must be 'near' or 'far', got '{}'", s));
}

namespace {

const char* to_string(AoStopping s) { return s == AoStopping::kSecrecy ? "secrecy" : "residual"; }

AoStopping parse_ao_stopping(const std::string& s) {
    if (s == "secrecy") return AoStopping::kSecrecy;
    if (s == "residual") return AoStopping::kResidual;
    throw ConfigError(fmt::format("ao_stopping must be 'secrecy' or 'residual', got '{}'", s));
}

template <class T>
T scalar(const YAML::Node& node, const std::string& key) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError(fmt::format("bad value for '{}': '{}'", key, node.as<std::string>("")));
    }
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ConfigError(fmt::format("config is not valid YAML: {}", e.what()));
    }
    SystemConfig c;
    if (root.IsNull()) return c;
    if (!root.IsMap()) throw ConfigError("config must be a flat key-value map");

    bool spacing_given = false;
    for (const auto& kv : root) {
        const auto key = kv.first.as<std::string>();
        const YAML::Node& v = kv.second;
        if (!v.IsScalar()) throw ConfigError(fmt::format("'{}' must be a scalar", key));
        if (key == "f_hz") c.f_hz = scalar<double>(v, key);
        else if (key == "spacing_m") { c.spacing_m = scalar<double>(v, key); spacing_given = true; }
        else if (key == "num_tx") c.num_tx = scalar<std::size_t>(v, key);
        else if (key == "num_rx_user") c.num_rx_user = scalar<std::size_t>(v, key);
        else if (key == "num_rx_eve") c.num_rx_eve = scalar<std::size_t>(v, key);
        else if (key == "num_rf_chains") c.num_rf_chains = scalar<std::size_t>(v, key);
        else if (key == "num_streams") c.num_streams = scalar<std::size_t>(v, key);
        else if (key == "noise_dbm") c.noise_dbm = scalar<double>(v, key);
        else if (key == "p_max_dbm") c.p_max_dbm = scalar<double>(v, key);
        else if (key == "user_distance_m") c.user_distance_m = scalar<double>(v, key);
        else if (key == "user_azimuth_deg") c.user_azimuth_deg = scalar<double>(v, key);
        else if (key == "eve_distance_m") c.eve_distance_m = scalar<double>(v, key);
        else if (key == "eve_azimuth_deg") c.eve_azimuth_deg = scalar<double>(v, key);
        else if (key == "trials") c.trials = scalar<std::size_t>(v, key);
        else if (key == "seed") c.seed = scalar<std::uint64_t>(v, key);
        else if (key == "eps1") c.eps1 = scalar<double>(v, key);
        else if (key == "eps2") c.eps2 = scalar<double>(v, key);
        else if (key == "eps3") c.eps3 = scalar<double>(v, key);
        else if (key == "max_bcd_iters") c.max_bcd_iters = scalar<std::size_t>(v, key);
        else if (key == "max_ao_iters") c.max_ao_iters = scalar<std::size_t>(v, key);
        else if (key == "channel_model") c.channel_model = parse_channel_model(v.as<std::string>());
        else if (key == "ao_stopping") c.ao_stopping = parse_ao_stopping(v.as<std::string>());
        else throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
    if (!spacing_given && c.f_hz > 0.0) c.spacing_m = 0.5 * wavelength(c.f_hz);
    return c;
}

SystemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const SystemConfig& c) {
    // {:.17g} keeps every double bit-exact through a parse round trip.
    std::string s;
    auto put = [&s](const char* key, const auto& value) {
        if constexpr (std::is_floating_point_v<std::decay_t<decltype(value)>>) {
            s += fmt::format("{}: {:.17g}\n", key, value);
        } else {
            s += fmt::format("{}: {}\n", key, value);
        }
    };
    put("f_hz", c.f_hz);
    put("spacing_m", c.spacing_m);
    put("num_tx", c.num_tx);
    put("num_rx_user", c.num_rx_user);
    put("num_rx_eve", c.num_rx_eve);
    put("num_rf_chains", c.num_rf_chains);
    put("num_streams", c.num_streams);
    put("noise_dbm", c.noise_dbm);
    put("p_max_dbm", c.p_max_dbm);
    put("user_distance_m", c.user_distance_m);
    put("user_azimuth_deg", c.user_azimuth_deg);
    put("eve_distance_m", c.eve_distance_m);
    put("eve_azimuth_deg", c.eve_azimuth_deg);
    put("trials", c.trials);
    put("seed", c.seed);
    put("eps1", c.eps1);
    put("eps2", c.eps2);
    put("eps3", c.eps3);
    put("max_bcd_iters", c.max_bcd_iters);
    put("max_ao_iters", c.max_ao_iters);
    put("channel_model", std::string(to_string(c.channel_model)));
    put("ao_stopping", std::string(to_string(c.ao_stopping)));
    return s;
}

}  // namespace nearsec
