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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "nearsec/channel.hpp"

namespace nearsec {

// How the AO loop decides it has converged.
enum class AoStopping {
    kSecrecy,   // |Delta C_s| of the effective beamformer <= eps2 (needs channels)
    kResidual,  // |Delta D_E| <= eps2
};

// Scenario parameters. The on-disk form is a flat YAML map whose keys carry
// their units (f_hz, p_max_dbm, ...); see serialize_config for the full list.
struct SystemConfig {
    double f_hz = 28e9;
    double spacing_m = 0.5 * wavelength(28e9);
    std::size_t num_tx = 32;         // M
    std::size_t num_rx_user = 8;     // M_U
    std::size_t num_rx_eve = 8;      // M_E
    std::size_t num_rf_chains = 4;   // M_R
    std::size_t num_streams = 2;     // K
    double noise_dbm = -105.0;
    double p_max_dbm = -10.0;
    double user_distance_m = 15.0;
    double user_azimuth_deg = 45.0;
    double eve_distance_m = 5.0;
    double eve_azimuth_deg = 45.0;
    std::size_t trials = 20;
    std::uint64_t seed = 1;
    double eps1 = 1e-4;  // BCD stop, bits/s/Hz
    double eps2 = 1e-6;  // AO stop
    double eps3 = 1e-6;  // bisection power gap, watts
    std::size_t max_bcd_iters = 500;
    std::size_t max_ao_iters = 500;
    ChannelModel channel_model = ChannelModel::kNearField;
    AoStopping ao_stopping = AoStopping::kSecrecy;

    double noise_power() const;  // watts
    double p_max() const;        // watts
    PolarLocation user_location() const;
    PolarLocation eve_location() const;
    ArrayGeometry tx_array() const;
    ArrayGeometry user_array() const;
    ArrayGeometry eve_array() const;

    // Throws ConfigError listing every violated constraint.
    void validate() const;

    bool operator==(const SystemConfig&) const = default;
};

// Test-suite scale: M = 32, 20 trials.
SystemConfig desk_preset();
// Full-scale simulation setup: M = 256, 100 trials.
SystemConfig paper_preset();

// Keys missing from the text keep their defaults; spacing_m defaults to half a
// wavelength of the configured f_hz. Unknown keys are rejected.
SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const SystemConfig& config);

const char* to_string(ChannelModel model);
ChannelModel parse_channel_model(const std::string& s);

}  // namespace nearsec
