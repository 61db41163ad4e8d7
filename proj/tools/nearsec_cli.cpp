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

// Command-line front end: run, sweep-pmax, sweep-eve, spectrum, trace.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "nearsec/config.hpp"
#include "nearsec/error.hpp"
#include "nearsec/harness.hpp"
#include "nearsec/io.hpp"
#include "nearsec/svg.hpp"

namespace fs = std::filesystem;
using namespace nearsec;

namespace {

struct Common {
    std::string config_path;
    std::string preset = "desk";
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string tag;
    bool svg = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "Scenario file (flat YAML key: value)");
    cmd->add_option("--preset", c.preset, "Defaults when no config is given")
        ->check(CLI::IsMember({"desk", "paper"}));
    cmd->add_option("--out", c.out_dir, "Output directory");
    cmd->add_option("--seed", c.seed, "Master seed (overrides the config)");
    cmd->add_option("--trials", c.trials, "Monte-Carlo trials (overrides the config)");
    cmd->add_option("--tag", c.tag, "Output file tag (default: seed<N>)");
    cmd->add_flag("--svg", c.svg, "Also write an SVG plot");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

SystemConfig resolve(const Common& c) {
    SystemConfig cfg = c.config_path.empty()
                           ? (c.preset == "paper" ? paper_preset() : desk_preset())
                           : load_config(c.config_path);
    if (c.seed) cfg.seed = *c.seed;
    if (c.trials) cfg.trials = *c.trials;
    cfg.validate();
    return cfg;
}

fs::path output(const Common& c, const SystemConfig& cfg, const std::string& command,
                const std::string& suffix = "", const std::string& ext = ".csv") {
    const std::string tag = c.tag.empty() ? fmt::format("seed{}", cfg.seed) : c.tag;
    return fs::path(c.out_dir) / fmt::format("{}_{}{}{}", command, tag, suffix, ext);
}

template <class Fn>
std::string to_text(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

// "a:b:n" -> n evenly spaced values; "v" -> {v}; "a,b,c" -> list.
std::vector<double> parse_values(const std::string& s) {
    std::vector<double> out;
    try {
        if (s.find(':') != std::string::npos) {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
            if (parts.size() != 3) throw ArgumentError("range must be lo:hi:count");
            const double lo = std::stod(parts[0]);
            const double hi = std::stod(parts[1]);
            const long n = std::stol(parts[2]);
            if (n < 1) throw ArgumentError("range count must be >= 1");
            for (long i = 0; i < n; ++i) {
                out.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
            }
            return out;
        }
        std::stringstream ss(s);
        for (std::string p; std::getline(ss, p, ',');) out.push_back(std::stod(p));
    } catch (const std::logic_error&) {
        throw ArgumentError(fmt::format("cannot parse value list '{}'", s));
    }
    if (out.empty()) throw ArgumentError(fmt::format("empty value list '{}'", s));
    return out;
}

void report_written(const fs::path& p) { std::cout << "wrote " << p.string() << '\n'; }

void emit(const fs::path& p, const std::string& content) {
    write_file(p, content);
    report_written(p);
}

// Spectrum axes must be evenly spaced; GridSpec only stores lo, hi, count.
std::vector<double> uniform_axis(const std::string& s, const char* flag) {
    auto v = parse_values(s);
    for (std::size_t i = 2; i < v.size(); ++i) {
        const double step = v[1] - v[0];
        if (std::abs(v[i] - v[i - 1] - step) > 1e-9 * std::max(1.0, std::abs(step))) {
            throw ArgumentError(fmt::format("{} must be evenly spaced (use lo:hi:n)", flag));
        }
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secure near-field hybrid beamforming simulator"};
    app.require_subcommand(1);

    Common run_c, pmax_c, eve_c, spec_c, trace_c;
    bool export_bf = false, export_ch = false;
    std::string pmax_list = "-20,-15,-10,-5,0";
    std::string model = "near";
    std::string eve_dist = "1:30:30", eve_angle = "45";
    std::string spec_dist = "1:30:59", spec_angle = "0:89:90";
    std::string init_preset = "desk", init_out;

    auto* run = app.add_subcommand("run", "Monte-Carlo two-stage optimization");
    add_common(run, run_c);
    run->add_flag("--export-beamformers", export_bf, "Write trial-0 P, W, W_fd and metadata");
    run->add_flag("--export-channels", export_ch, "Write the user and eavesdropper channels");

    auto* pmax = app.add_subcommand("sweep-pmax", "Secrecy capacity versus power budget");
    add_common(pmax, pmax_c);
    pmax->add_option("--pmax", pmax_list, "Power budgets in dBm (list or lo:hi:n)");

    auto* eve = app.add_subcommand("sweep-eve", "Secrecy capacity versus eavesdropper location");
    add_common(eve, eve_c);
    eve->add_option("--model", model, "Channel model")->check(CLI::IsMember({"near", "far"}));
    eve->add_option("--grid-dist", eve_dist, "Eavesdropper distances in m (list or lo:hi:n)");
    eve->add_option("--grid-angle", eve_angle, "Eavesdropper angles in degrees (list or lo:hi:n)");

    auto* spec = app.add_subcommand("spectrum", "Normalized power map of the optimized beam");
    add_common(spec, spec_c);
    spec->add_option("--grid-dist", spec_dist, "Distance axis lo:hi:n in m");
    spec->add_option("--grid-angle", spec_angle, "Angle axis lo:hi:n in degrees");

    auto* trace = app.add_subcommand("trace", "Convergence traces of one seeded trial");
    add_common(trace, trace_c);

    auto* init = app.add_subcommand("init-config", "Print or write a preset scenario file");
    init->add_option("--preset", init_preset)->check(CLI::IsMember({"desk", "paper"}));
    init->add_option("--out", init_out, "File to write (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }

    try {
        if (*run) {
            const auto cfg = resolve(run_c);
            const auto res = run_scenario(cfg, run_c.threads);
            emit(output(run_c, cfg, "run"), to_text([&](auto& os) { write_run_csv(os, res); }));
            std::cout << fmt::format(
                "trials={} cs_fd_mean={:.6g} cs_fd_std={:.6g} cs_hybrid_mean={:.6g} "
                "cs_hybrid_std={:.6g} bcd_unconverged={} ao_unconverged={}\n",
                cfg.trials, res.fd_c_s.mean, res.fd_c_s.stddev, res.hybrid_c_s.mean,
                res.hybrid_c_s.stddev, res.bcd_unconverged, res.ao_unconverged);
            const auto& t0 = res.trials.front();
            if (export_bf) {
                const auto& bf = t0.hybrid.beamformer;
                emit(output(run_c, cfg, "run", "_P"), to_text([&](auto& os) { write_matrix_csv(os, bf.p); }));
                emit(output(run_c, cfg, "run", "_W"), to_text([&](auto& os) { write_matrix_csv(os, bf.w); }));
                emit(output(run_c, cfg, "run", "_Wfd"),
                     to_text([&](auto& os) { write_matrix_csv(os, t0.fd.w_fd); }));
                emit(output(run_c, cfg, "run", "_beamformer", ".json"),
                     beamformer_metadata_json(t0, cfg));
            }
            if (export_ch) {
                const auto ch = build_channels(cfg);
                emit(output(run_c, cfg, "run", "_Hu"),
                     to_text([&](auto& os) { write_matrix_csv(os, ch.user.matrix); }));
                emit(output(run_c, cfg, "run", "_He"),
                     to_text([&](auto& os) { write_matrix_csv(os, ch.eve.matrix); }));
            }
            if (run_c.svg) {
                std::vector<double> x;
                svg::Series bcd{"fully-digital C_s (trial 0)", {}};
                for (std::size_t n = 0; n < t0.fd.trace.size(); ++n) {
                    x.push_back(static_cast<double>(n));
                    bcd.y.push_back(t0.fd.trace[n].c_s);
                }
                emit(output(run_c, cfg, "run", "", ".svg"),
                     svg::line_plot("BCD convergence", "iteration", "C_s [bit/s/Hz]", x, {bcd}));
            }
        } else if (*pmax) {
            const auto cfg = resolve(pmax_c);
            const auto rows = sweep_pmax(cfg, parse_values(pmax_list), pmax_c.threads);
            emit(output(pmax_c, cfg, "sweep-pmax"),
                 to_text([&](auto& os) { write_sweep_pmax_csv(os, rows); }));
            if (pmax_c.svg) {
                std::vector<double> x;
                svg::Series fd{"fully-digital", {}}, hy{"hybrid", {}};
                for (const auto& r : rows) {
                    x.push_back(r.p_max_dbm);
                    fd.y.push_back(r.fd.mean);
                    hy.y.push_back(r.hybrid.mean);
                }
                emit(output(pmax_c, cfg, "sweep-pmax", "", ".svg"),
                     svg::line_plot("Secrecy capacity vs power budget", "P_max [dBm]",
                                    "C_s [bit/s/Hz]", x, {fd, hy}));
            }
        } else if (*eve) {
            const auto cfg = resolve(eve_c);
            const auto m = parse_channel_model(model);
            std::vector<PolarLocation> grid;
            for (double a : parse_values(eve_angle)) {
                for (double d : parse_values(eve_dist)) grid.push_back({d, deg2rad(a)});
            }
            const auto rows = sweep_eve_location(cfg, grid, m, eve_c.threads);
            emit(output(eve_c, cfg, "sweep-eve", "_" + model),
                 to_text([&](auto& os) { write_sweep_eve_csv(os, rows, m); }));
            if (eve_c.svg) {
                std::vector<double> x;
                svg::Series hy{"hybrid", {}}, fd{"fully-digital", {}};
                for (const auto& r : rows) {
                    x.push_back(static_cast<double>(x.size()));
                    fd.y.push_back(r.fd.mean);
                    hy.y.push_back(r.hybrid.mean);
                }
                emit(output(eve_c, cfg, "sweep-eve", "_" + model, ".svg"),
                     svg::line_plot("Secrecy capacity vs eavesdropper location (" + model + ")",
                                    "grid point", "C_s [bit/s/Hz]", x, {fd, hy}));
            }
        } else if (*spec) {
            const auto cfg = resolve(spec_c);
            const auto d = uniform_axis(spec_dist, "--grid-dist");
            const auto a = uniform_axis(spec_angle, "--grid-angle");
            GridSpec g{d.front(), d.back(), d.size(), deg2rad(a.front()), deg2rad(a.back()), a.size()};
            const auto map = spectrum_map(cfg, g);
            emit(output(spec_c, cfg, "spectrum"),
                 to_text([&](auto& os) { write_spectrum_csv(os, map); }));
            const auto& peak = map.points[map.peak].location;
            std::cout << fmt::format("peak at {:.4g} m, {:.4g} deg\n", peak.distance,
                                     rad2deg(peak.azimuth));
            if (spec_c.svg) {
                std::vector<double> values;
                for (const auto& p : map.points) values.push_back(p.power);
                emit(output(spec_c, cfg, "spectrum", "", ".svg"),
                     svg::heatmap("Normalized signal power", "distance [m]", "angle [deg]", d, a,
                                  values));
            }
        } else if (*trace) {
            const auto cfg = resolve(trace_c);
            const auto tr = convergence_trace(cfg);
            emit(output(trace_c, cfg, "trace"), to_text([&](auto& os) { write_trace_csv(os, tr); }));
            if (trace_c.svg) {
                std::vector<double> x, y;
                for (std::size_t n = 0; n < tr.bcd.size(); ++n) {
                    x.push_back(static_cast<double>(n));
                    y.push_back(tr.bcd[n].c_s);
                }
                emit(output(trace_c, cfg, "trace", "_bcd", ".svg"),
                     svg::line_plot("BCD loop", "iteration", "C_s [bit/s/Hz]", x, {{"C_s", y}}));
                std::vector<double> xa;
                for (std::size_t n = 0; n < tr.ao_residual.size(); ++n) xa.push_back(static_cast<double>(n));
                emit(output(trace_c, cfg, "trace", "_ao", ".svg"),
                     svg::line_plot("AO loop", "iteration", "D_E", xa, {{"D_E", tr.ao_residual}}));
            }
        } else if (*init) {
            const auto cfg = init_preset == "paper" ? paper_preset() : desk_preset();
            const auto text = serialize_config(cfg);
            if (init_out.empty()) {
                std::cout << text;
            } else {
                emit(init_out, text);
            }
        }
    } catch (const Error& e) {
        std::cerr << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
        return 3;
    }
    return 0;
}
