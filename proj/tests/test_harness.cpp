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


#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nearsec/config.hpp"
#include "nearsec/error.hpp"
#include "nearsec/harness.hpp"
#include "nearsec/io.hpp"
#include "nearsec/log.hpp"
#include "nearsec/svg.hpp"

using namespace nearsec;

namespace {

SystemConfig small(std::size_t trials = 3) {
    SystemConfig c = desk_preset();
    c.num_tx = 16;
    c.trials = trials;
    return c;
}

template <class Fn>
std::string text(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("SystemConfig - defaults and derived quantities") {
    const SystemConfig c = desk_preset();
    CHECK(c.f_hz == 28e9);
    CHECK(c.spacing_m == Catch::Approx(0.5 * 299792458.0 / 28e9).epsilon(1e-15));
    CHECK(c.num_tx == 32);
    CHECK(c.num_rx_user == 8);
    CHECK(c.num_rx_eve == 8);
    CHECK(c.num_rf_chains == 4);
    CHECK(c.num_streams == 2);
    CHECK(c.noise_power() == Catch::Approx(3.162e-14).epsilon(1e-3));
    CHECK(c.p_max() == Catch::Approx(1e-4).epsilon(1e-12));
    CHECK(c.eps1 == 1e-4);
    CHECK(c.eps2 == 1e-6);
    CHECK(c.eps3 == 1e-6);
    CHECK(c.trials == 20);
    CHECK(c.user_location().distance == 15.0);
    CHECK(c.eve_location().distance == 5.0);
    CHECK(c.user_location().azimuth == Catch::Approx(kPi / 4).epsilon(1e-15));
    const auto paper = paper_preset();
    CHECK(paper.num_tx == 256);
    CHECK(paper.trials == 100);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("SystemConfig - validation lists every violation") {
    SystemConfig c = desk_preset();
    c.num_streams = 5;
    c.trials = 0;
    c.eps2 = -1.0;
    c.eve_azimuth_deg = 90.0;
    try {
        c.validate();
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        const std::string m = e.what();
        CHECK(m.find("num_streams") != std::string::npos);
        CHECK(m.find("trials") != std::string::npos);
        CHECK(m.find("eps2") != std::string::npos);
        CHECK(m.find("eve_azimuth_deg") != std::string::npos);
    }
    c = desk_preset();
    c.num_rf_chains = 40;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("parse_config - flat map, units in keys, unknown keys rejected") {
    const auto c = parse_config("num_tx: 64\np_max_dbm: -15\nchannel_model: far\nf_hz: 30e9\n");
    CHECK(c.num_tx == 64);
    CHECK(c.p_max_dbm == -15.0);
    CHECK(c.channel_model == ChannelModel::kFarField);
    // Spacing follows the carrier when not given.
    CHECK(c.spacing_m == Catch::Approx(0.5 * 299792458.0 / 30e9).epsilon(1e-15));
    CHECK(parse_config("") == desk_preset());
    CHECK_THROWS_AS(parse_config("num_antennas: 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("num_tx: many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("- 1\n- 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("channel_model: spherical\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("num_tx: [1\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/nearsec.yaml"), ConfigError);
}

TEST_CASE("parse_config - serialization round trip") {
    std::mt19937_64 rng(81);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        SystemConfig c;
        c.f_hz = 1e9 + 1e11 * u(rng);
        c.spacing_m = 1e-3 + u(rng);
        c.num_tx = 1 + static_cast<std::size_t>(300 * u(rng));
        c.num_rf_chains = 1 + static_cast<std::size_t>((c.num_tx - 1) * u(rng));
        c.num_streams = 1 + static_cast<std::size_t>((c.num_rf_chains - 1) * u(rng));
        c.noise_dbm = -120 + 40 * u(rng);
        c.p_max_dbm = -30 + 30 * u(rng);
        c.user_distance_m = 0.1 + 100 * u(rng);
        c.eve_azimuth_deg = -89 + 178 * u(rng);
        c.seed = rng();
        c.eps1 = u(rng) * 1e-3 + 1e-300;
        c.channel_model = u(rng) < 0.5 ? ChannelModel::kNearField : ChannelModel::kFarField;
        c.ao_stopping = u(rng) < 0.5 ? AoStopping::kSecrecy : AoStopping::kResidual;
        REQUIRE(parse_config(serialize_config(c)) == c);
    }
}

TEST_CASE("trial_seed and summarize") {
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < 1000; ++i) seen.insert(trial_seed(7, i));
    CHECK(seen.size() == 1000);
    CHECK(trial_seed(1, 3) != trial_seed(2, 3));

    const auto s = summarize({1.0, 2.0, 3.0, 4.0});
    CHECK(s.mean == 2.5);
    CHECK(s.stddev == Catch::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
    CHECK(summarize({2.0}).stddev == 0.0);
}

TEST_CASE("run_scenario - desk defaults: converged, hybrid bounded by fully digital") {
    SystemConfig c = desk_preset();
    c.trials = 4;
    const auto r = run_scenario(c, 1);
    REQUIRE(r.trials.size() == 4);
    CHECK(r.bcd_unconverged == 0);
    CHECK(r.ao_unconverged == 0);
    for (const auto& t : r.trials) {
        CHECK(t.hybrid_report.c_s <= t.fd_report.c_s + 1e-6);
        CHECK(t.fd_report.c_s >= 0.0);
        CHECK(t.hybrid_report.c_s >= 0.0);
        CHECK(t.fd_report.transmit_power <= c.p_max() * (1 + 1e-9));
        CHECK(t.hybrid_report.transmit_power <= c.p_max() * (1 + 1e-9));
        CHECK(t.seed == trial_seed(c.seed, t.index));
    }
    CHECK(r.hybrid_c_s.mean <= r.fd_c_s.mean + 1e-6);
}

TEST_CASE("run_scenario - identical user and eavesdropper locations give zero") {
    SystemConfig c = small();
    c.eve_distance_m = c.user_distance_m;
    const auto r = run_scenario(c, 1);
    CHECK(r.fd_c_s.mean < 1e-9);
    CHECK(r.hybrid_c_s.mean < 1e-9);
}

TEST_CASE("run_scenario - deterministic and independent of thread count") {
    const SystemConfig c = small(4);
    const auto a = run_scenario(c, 1);
    const auto b = run_scenario(c, 1);
    const auto p = run_scenario(c, 3);
    const auto csv = [](const ScenarioResult& r) { return text([&](auto& os) { write_run_csv(os, r); }); };
    CHECK(csv(a) == csv(b));
    CHECK(csv(a) == csv(p));
    for (std::size_t i = 0; i < 4; ++i) CHECK(a.trials[i].hybrid.beamformer.p == p.trials[i].hybrid.beamformer.p);
}

TEST_CASE("run_scenario - invalid configuration") {
    SystemConfig c = small();
    c.num_streams = 9;
    CHECK_THROWS_AS(run_scenario(c), ConfigError);
}

TEST_CASE("sweep_pmax - single point, monotone in power, fewer antennas lower") {
    const SystemConfig c = small(2);
    const auto one = sweep_pmax(c, {c.p_max_dbm}, 1);
    const auto direct = run_scenario(c, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].fd.mean == direct.fd_c_s.mean);
    CHECK(one[0].hybrid.mean == direct.hybrid_c_s.mean);

    SystemConfig big = c;
    big.num_tx = 32;
    const auto rows = sweep_pmax(big, {-20.0, -10.0}, 1);
    CHECK(rows[0].fd.mean <= rows[1].fd.mean + 1e-3);
    CHECK(rows[0].hybrid.mean <= rows[1].hybrid.mean + 1e-3);
    const auto halved = sweep_pmax(c, {-20.0, -10.0}, 1);
    CHECK(halved[0].fd.mean < rows[0].fd.mean);
    CHECK(halved[1].fd.mean < rows[1].fd.mean);
    CHECK_THROWS_AS(sweep_pmax(c, {}), ArgumentError);
}

TEST_CASE("sweep_eve_location - near-field distance disparity vs far field") {
    SystemConfig c = small(2);
    c.num_tx = 32;
    const double az = deg2rad(c.user_azimuth_deg);
    const std::vector<PolarLocation> grid{{5.0, az}, {15.0, az}};
    const auto near = sweep_eve_location(c, grid, ChannelModel::kNearField, 1);
    const auto far = sweep_eve_location(c, grid, ChannelModel::kFarField, 1);
    CHECK(near[0].fd.mean > 0.05);
    CHECK(near[1].fd.mean < 1e-9);
    CHECK(far[0].fd.mean < 1e-9);
    CHECK(far[1].fd.mean < 1e-9);
    CHECK(near[0].location.distance == 5.0);
    CHECK_THROWS_AS(sweep_eve_location(c, {}, ChannelModel::kNearField), ArgumentError);
}

TEST_CASE("GridSpec - layout, nearest cell, validation") {
    GridSpec g{1.0, 10.0, 10, deg2rad(-30.0), deg2rad(30.0), 7};
    const auto loc = g.locations();
    REQUIRE(loc.size() == 70);
    CHECK(loc[0].distance == 1.0);
    CHECK(loc[9].distance == 10.0);
    CHECK(loc[10].azimuth == Catch::Approx(deg2rad(-20.0)).epsilon(1e-12));
    const std::size_t idx = g.nearest({4.2, deg2rad(11.0)});
    CHECK(loc[idx].distance == 4.0);
    CHECK(loc[idx].azimuth == Catch::Approx(deg2rad(10.0)).epsilon(1e-12));
    CHECK(g.nearest({100.0, 1.5}) == 69);
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 2, 0.0, 0.1, 2}.validate()), ArgumentError);
    CHECK_THROWS_AS((GridSpec{1.0, 2.0, 0, 0.0, 0.1, 2}.validate()), ArgumentError);
    CHECK_THROWS_AS((GridSpec{1.0, 2.0, 2, 0.0, 1.6, 2}.validate()), ArgumentError);
}

TEST_CASE("spectrum_map - normalized with a single unit peak") {
    const SystemConfig c = small(1);
    const GridSpec g{1.0, 20.0, 20, deg2rad(-60.0), deg2rad(60.0), 25};
    const auto map = spectrum_map(c, g);
    REQUIRE(map.points.size() == 500);
    std::size_t ones = 0;
    for (const auto& p : map.points) {
        CHECK(p.power >= 0.0);
        CHECK(p.power <= 1.0);
        ones += p.power == 1.0 ? 1 : 0;
    }
    CHECK(ones == 1);
    CHECK(map.points[map.peak].power == 1.0);
    const std::string csv = text([&](auto& os) { write_spectrum_csv(os, map); });
    CHECK(csv.rfind("distance_m,angle_deg,normalized_power\n", 0) == 0);
    CHECK(lines(csv) == 501);
}

TEST_CASE("convergence_trace - monotone loops within caps") {
    const SystemConfig c = desk_preset();
    const auto tr = convergence_trace(c);
    REQUIRE(tr.bcd.size() >= 2);
    CHECK(tr.bcd.size() <= c.max_bcd_iters + 1);
    CHECK(tr.ao_residual.size() <= c.max_ao_iters + 1);
    for (std::size_t n = 1; n < tr.bcd.size(); ++n) CHECK(tr.bcd[n].c_s_raw >= tr.bcd[n - 1].c_s_raw - 1e-8);
    for (std::size_t n = 1; n < tr.ao_residual.size(); ++n)
        CHECK(tr.ao_residual[n] <= tr.ao_residual[n - 1] * (1 + 1e-12));
    const std::string csv = text([&](auto& os) { write_trace_csv(os, tr); });
    CHECK(csv.rfind("loop,iteration,c_s_bits,d_e\n", 0) == 0);
    CHECK(lines(csv) == 1 + tr.bcd.size() + tr.ao_residual.size());
}

TEST_CASE("io - matrix CSV and metadata JSON") {
    ComplexMatrix m(2, 1);
    m << Complex(0.1, -2.0), Complex(1e-20, 3.0);
    const std::string csv = text([&](auto& os) { write_matrix_csv(os, m); });
    CHECK(csv == "row,col,re,im\n0,0,0.10000000000000001,-2\n1,0,9.9999999999999995e-21,3\n");

    const SystemConfig c = small(1);
    const auto t = run_trial(c, build_channels(c), 0);
    const auto j = nlohmann::json::parse(beamformer_metadata_json(t, c));
    CHECK(j["num_tx"] == 16);
    CHECK(j["num_rf_chains"] == 4);
    CHECK(j["num_streams"] == 2);
    CHECK(j["ao_converged"] == true);
    CHECK(j["residual"].get<double>() == t.hybrid.final_residual);

    const auto dir = std::filesystem::temp_directory_path() / "nearsec_io_test" / "nested";
    std::filesystem::remove_all(dir.parent_path());
    write_file(dir / "x.csv", csv);
    std::ifstream in(dir / "x.csv");
    std::stringstream back;
    back << in.rdbuf();
    CHECK(back.str() == csv);
    std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("svg - line plot and heat map are self-contained documents") {
    const std::string line = svg::line_plot("C_s vs P_max", "P_max [dBm]", "C_s", {-20, -15, -10},
                                            {{"FD", {0.1, 0.4, 1.0}}, {"hybrid", {0.1, 0.39, 0.99}}});
    CHECK(line.rfind("<svg", 0) == 0);
    CHECK(line.find("</svg>") != std::string::npos);
    CHECK(line.find("hybrid") != std::string::npos);
    CHECK(line.find("C_s vs P_max") != std::string::npos);

    const std::string heat = svg::heatmap("map", "d", "angle", {1, 2, 3}, {-1, 1}, {0, 0.5, 1, 0.2, 0.1, 0});
    CHECK(heat.rfind("<svg", 0) == 0);
    CHECK(heat.find("</svg>") != std::string::npos);
    CHECK_THROWS_AS(svg::heatmap("m", "x", "y", {1, 2}, {1}, {0.0}), Error);
}
