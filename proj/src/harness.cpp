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

#include "nearsec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "nearsec/error.hpp"
#include "nearsec/log.hpp"

namespace nearsec {

Stats summarize(const std::vector<double>& values) {
    Stats s;
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double acc = 0.0;
        for (double v : values) acc += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(acc / static_cast<double>(values.size() - 1));
    }
    return s;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) {
    std::uint64_t z = master + (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Channels build_channels(const SystemConfig& config) {
    config.validate();
    const auto tx = config.tx_array();
    return {make_channel(config.channel_model, tx, config.user_array(), config.f_hz),
            make_channel(config.channel_model, tx, config.eve_array(), config.f_hz)};
}

TrialResult run_trial(const SystemConfig& config, const Channels& channels, std::size_t index) {
    TrialResult r;
    r.index = index;
    r.seed = trial_seed(config.seed, index);
    std::mt19937_64 rng(r.seed);

    const auto m = static_cast<Eigen::Index>(config.num_tx);
    const auto k = static_cast<Eigen::Index>(config.num_streams);
    const ComplexMatrix w0 = random_beamformer(m, k, config.p_max(), rng);
    r.fd = bcd_optimize(channels.user, channels.eve, config, w0);
    r.fd_report = evaluate(channels.user, channels.eve, r.fd.w_fd, config.noise_power());
    r.fd_report.iterations.bcd = r.fd.iterations;
    for (std::size_t n = 1; n < r.fd.trace.size(); ++n) {
        r.fd_report.iterations.bisection.push_back(r.fd.trace[n].bisection_steps);
    }

    const ComplexMatrix p0 = initial_analog(r.fd.w_fd, config.num_rf_chains, rng);
    r.hybrid = ao_project(r.fd.w_fd, ao_options(config, &channels.user, &channels.eve), p0);
    r.hybrid_report = evaluate(channels.user, channels.eve, r.hybrid.beamformer.effective(),
                               config.noise_power());
    if (r.hybrid.rescale_factor < 1.0) {
        warn(fmt::format("trial {}: hybrid beamformer rescaled by {:.6g} to meet P_max; "
                         "C_s {:.6g} -> {:.6g} bits/s/Hz",
                         index, r.hybrid.rescale_factor, r.hybrid.c_s_before_rescale,
                         r.hybrid_report.c_s));
    }
    r.hybrid_report.iterations = r.fd_report.iterations;
    r.hybrid_report.iterations.ao = r.hybrid.iterations;
    return r;
}

ScenarioResult run_scenario(const SystemConfig& config, unsigned threads) {
    config.validate();
    const Channels channels = build_channels(config);

    ScenarioResult out;
    out.config = config;
    out.trials.resize(config.trials);

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.trials));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned id) {
        try {
            for (std::size_t t = next++; t < config.trials; t = next++) {
                out.trials[t] = run_trial(config, channels, t);
            }
        } catch (...) {
            errors[id] = std::current_exception();
            next = config.trials;
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    std::vector<double> fd, hy;
    for (const auto& t : out.trials) {
        fd.push_back(t.fd_report.c_s);
        hy.push_back(t.hybrid_report.c_s);
        out.bcd_unconverged += t.fd.converged ? 0 : 1;
        out.ao_unconverged += t.hybrid.converged ? 0 : 1;
    }
    out.fd_c_s = summarize(fd);
    out.hybrid_c_s = summarize(hy);
    return out;
}

std::vector<PmaxRow> sweep_pmax(const SystemConfig& config, const std::vector<double>& p_max_dbm,
                                unsigned threads) {
    if (p_max_dbm.empty()) throw ArgumentError("sweep_pmax: empty power list");
    std::vector<PmaxRow> rows;
    for (double p : p_max_dbm) {
        SystemConfig c = config;
        c.p_max_dbm = p;
        const auto res = run_scenario(c, threads);
        rows.push_back({p, res.fd_c_s, res.hybrid_c_s});
    }
    return rows;
}

std::vector<EveRow> sweep_eve_location(const SystemConfig& config,
                                       const std::vector<PolarLocation>& grid, ChannelModel model,
                                       unsigned threads) {
    if (grid.empty()) throw ArgumentError("sweep_eve_location: empty grid");
    std::vector<EveRow> rows;
    for (const auto& loc : grid) {
        SystemConfig c = config;
        c.channel_model = model;
        c.eve_distance_m = loc.distance;
        c.eve_azimuth_deg = rad2deg(loc.azimuth);
        const auto res = run_scenario(c, threads);
        rows.push_back({loc, res.fd_c_s, res.hybrid_c_s});
    }
    return rows;
}

namespace {

double grid_value(double lo, double hi, std::size_t n, std::size_t i) {
    if (n == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

std::size_t nearest_index(double lo, double hi, std::size_t n, double v) {
    if (n == 1) return 0;
    const double step = (hi - lo) / static_cast<double>(n - 1);
    const double idx = std::round((v - lo) / step);
    return static_cast<std::size_t>(std::clamp(idx, 0.0, static_cast<double>(n - 1)));
}

}  // namespace

void GridSpec::validate() const {
    if (distances < 1 || angles < 1) throw ArgumentError("grid resolution must be positive");
    if (!(d_min > 0.0) || d_max < d_min) throw ArgumentError("grid distances must satisfy 0 < d_min <= d_max");
    if (az_max < az_min || !(std::abs(az_min) < 0.5 * kPi) || !(std::abs(az_max) < 0.5 * kPi)) {
        throw ArgumentError("grid angles must satisfy -90 < az_min <= az_max < 90 degrees");
    }
}

std::vector<PolarLocation> GridSpec::locations() const {
    validate();
    std::vector<PolarLocation> out;
    out.reserve(distances * angles);
    for (std::size_t a = 0; a < angles; ++a) {
        for (std::size_t d = 0; d < distances; ++d) {
            out.push_back({grid_value(d_min, d_max, distances, d),
                           grid_value(az_min, az_max, angles, a)});
        }
    }
    return out;
}

std::size_t GridSpec::nearest(const PolarLocation& loc) const {
    return nearest_index(az_min, az_max, angles, loc.azimuth) * distances +
           nearest_index(d_min, d_max, distances, loc.distance);
}

SpectrumMap spectrum_map(const SystemConfig& config, const GridSpec& grid) {
    config.validate();
    grid.validate();
    const Channels channels = build_channels(config);
    SpectrumMap out;
    out.grid = grid;
    out.trial = run_trial(config, channels, 0);
    const auto& bf = out.trial.hybrid.beamformer;
    out.points = power_spectrum(bf.p, bf.w, config.tx_array(), config.f_hz, grid.locations());
    out.peak = static_cast<std::size_t>(
        std::max_element(out.points.begin(), out.points.end(),
                         [](const auto& a, const auto& b) { return a.power < b.power; }) -
        out.points.begin());
    return out;
}

ConvergenceTrace convergence_trace(const SystemConfig& config) {
    const Channels channels = build_channels(config);
    const auto trial = run_trial(config, channels, 0);
    return {trial.fd.trace, trial.hybrid.residual, trial.hybrid.c_s};
}

}  // namespace nearsec
