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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nearsec/channel.hpp"
#include "nearsec/config.hpp"
#include "nearsec/metrics.hpp"
#include "nearsec/stage1_fd.hpp"
#include "nearsec/stage2_hybrid.hpp"

namespace nearsec {

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single value
};

Stats summarize(const std::vector<double>& values);

// splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15). Trials are seeded
// independently of the order in which they run.
std::uint64_t trial_seed(std::uint64_t master, std::size_t index);

struct Channels {
    ChannelMatrix user;
    ChannelMatrix eve;
};
Channels build_channels(const SystemConfig& config);

struct TrialResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    FDState fd;
    SecrecyReport fd_report;
    HybridResult hybrid;
    SecrecyReport hybrid_report;
};

// One two-stage run: random W_fd start, BCD, matched-phase analog start, AO.
TrialResult run_trial(const SystemConfig& config, const Channels& channels, std::size_t index);

struct ScenarioResult {
    SystemConfig config;
    std::vector<TrialResult> trials;  // ordered by trial index
    Stats fd_c_s;
    Stats hybrid_c_s;
    std::size_t bcd_unconverged = 0;
    std::size_t ao_unconverged = 0;
};

// Runs config.trials independent trials on up to `threads` worker threads
// (0 = hardware concurrency). Output does not depend on the thread count.
ScenarioResult run_scenario(const SystemConfig& config, unsigned threads = 0);

struct PmaxRow {
    double p_max_dbm = 0.0;
    Stats fd;
    Stats hybrid;
};
std::vector<PmaxRow> sweep_pmax(const SystemConfig& config, const std::vector<double>& p_max_dbm,
                                unsigned threads = 0);

struct EveRow {
    PolarLocation location;
    Stats fd;
    Stats hybrid;
};
std::vector<EveRow> sweep_eve_location(const SystemConfig& config,
                                       const std::vector<PolarLocation>& grid, ChannelModel model,
                                       unsigned threads = 0);

// Polar grid, distance-major: point (a, d) is at index a * distances + d.
struct GridSpec {
    double d_min = 1.0;
    double d_max = 30.0;
    std::size_t distances = 30;
    double az_min = -kPi / 3.0;  // radians
    double az_max = kPi / 3.0;
    std::size_t angles = 31;

    std::vector<PolarLocation> locations() const;
    // Index of the grid cell nearest to `loc` (distance and angle separately).
    std::size_t nearest(const PolarLocation& loc) const;
    void validate() const;
};

struct SpectrumMap {
    GridSpec grid;
    std::vector<SpectrumPoint> points;
    std::size_t peak = 0;
    TrialResult trial;
};

// Optimizes trial 0 of the scenario once and probes its hybrid beamformer.
SpectrumMap spectrum_map(const SystemConfig& config, const GridSpec& grid);

struct ConvergenceTrace {
    std::vector<TracePoint> bcd;
    std::vector<double> ao_residual;
    std::vector<double> ao_c_s;
};
ConvergenceTrace convergence_trace(const SystemConfig& config);

}  // namespace nearsec
