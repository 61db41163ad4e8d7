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
#include <random>

#include "nearsec/channel.hpp"
#include "nearsec/error.hpp"
#include "nearsec/metrics.hpp"
#include "support.hpp"

using namespace nearsec;

namespace {

const double half_lambda = 0.5 * wavelength(28e9);

ChannelMatrix wrap(const ComplexMatrix& m) {
    ChannelMatrix h;
    h.matrix = m;
    h.carrier_frequency = 28e9;
    return h;
}

}  // namespace

TEST_CASE("dbm_to_watts - noise floor") {
    CHECK(dbm_to_watts(-105.0) == Catch::Approx(3.16227766e-14).epsilon(1e-8));
    CHECK(dbm_to_watts(30.0) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watts(-10.0) == Catch::Approx(1e-4).epsilon(1e-14));
}

TEST_CASE("mutual_information - closed forms") {
    std::mt19937_64 rng(31);
    const ComplexMatrix h = testing::randn(3, 4, rng);
    CHECK(mutual_information(h, ComplexMatrix::Zero(4, 2), 1.0) == 0.0);

    // sigma^-2 |h w|^2 = 1 -> one bit.
    ComplexMatrix h1(1, 1), w1(1, 1);
    h1(0, 0) = Complex(0.0, 2e-7);
    w1(0, 0) = 0.5;
    CHECK(mutual_information(wrap(h1), w1, 1e-14) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mutual_information - eigenvalue oracle") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix h = testing::randn(2, 4, rng);
        const ComplexMatrix w = testing::randn(4, 2, rng);
        const double sigma2 = 0.3;
        const ComplexMatrix hw = h * w;
        const auto ev = hermitian_eig(hw * hw.adjoint() / sigma2).values;
        double oracle = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) oracle += std::log2(1.0 + std::max(ev(i), 0.0));
        CHECK(std::abs(mutual_information(h, w, sigma2) - oracle) <= 1e-10);
    }
}

TEST_CASE("mutual_information - unitary invariance and scaling monotonicity") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 50; ++t) {
        const ComplexMatrix h = testing::randn(3, 5, rng);
        const ComplexMatrix w = testing::randn(5, 2, rng);
        const ComplexMatrix q = testing::randn(2, 2, rng).householderQr().householderQ();
        const double base = mutual_information(h, w, 0.7);
        CHECK(std::abs(mutual_information(h, w * q, 0.7) - base) <= 1e-12 * std::max(1.0, base));
        double prev = base;
        for (double a : {1.0, 1.1, 2.0, 10.0}) {
            const double c = mutual_information(h, a * w, 0.7);
            CHECK(c >= prev - 1e-12);
            prev = c;
        }
    }
}

TEST_CASE("mutual_information - errors") {
    CHECK_THROWS_AS(mutual_information(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(4, 1), 1.0),
                    DimensionError);
    CHECK_THROWS_AS(mutual_information(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(3, 1), 0.0),
                    ArgumentError);
}

TEST_CASE("secrecy_capacity - identical channels and clipping") {
    std::mt19937_64 rng(34);
    const ChannelMatrix h = wrap(testing::randn(4, 6, rng));
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix w = testing::randn(6, 2, rng);
        CHECK(secrecy_capacity(h, h, w, 0.1) == 0.0);
    }

    // Scale eve's copy of the channel so that C_U = 3 and C_E = 1 bits.
    ComplexMatrix hu(1, 1), he(1, 1), w(1, 1);
    hu(0, 0) = std::sqrt(7.0);
    he(0, 0) = 1.0;
    w(0, 0) = 1.0;
    const auto r = evaluate(wrap(hu), wrap(he), w, 1.0);
    CHECK(r.c_u == Catch::Approx(3.0).epsilon(1e-14));
    CHECK(r.c_e == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(r.c_s == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(r.transmit_power == 1.0);
}

TEST_CASE("secrecy_capacity - closer far-field eavesdropper on the same bearing gets more") {
    const double f = 28e9;
    const auto tx = ula_at_origin(32, half_lambda);
    const auto hu = farfield_channel(tx, ula_at(8, half_lambda, {15.0, deg2rad(45.0)}), f);
    const auto he = farfield_channel(tx, ula_at(8, half_lambda, {5.0, deg2rad(45.0)}), f);
    // MRT towards U with 1 mW.
    ComplexMatrix w = hu.matrix.row(0).adjoint();
    w *= std::sqrt(1e-3) / w.norm();
    const auto r = evaluate(hu, he, w, dbm_to_watts(-105.0));
    CHECK(r.c_u < r.c_e);
    CHECK(r.c_s == 0.0);
}

TEST_CASE("beam_similarity - closed forms and elementwise oracle") {
    std::mt19937_64 rng(35);
    const ComplexMatrix p = testing::random_phases(6, 3, rng);
    const ComplexMatrix w = testing::randn(3, 2, rng);
    CHECK(beam_similarity(p * w, p, w) == 0.0);
    const ComplexMatrix w_fd = testing::randn(6, 2, rng);
    CHECK(beam_similarity(w_fd, p, ComplexMatrix::Zero(3, 2)) ==
          Catch::Approx(w_fd.squaredNorm()).epsilon(1e-15));

    const ComplexMatrix pw = p * w;
    double oracle = 0.0;
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) oracle += std::norm(w_fd(i, j) - pw(i, j));
    CHECK(std::abs(beam_similarity(w_fd, p, w) - oracle) <= 1e-12 * oracle);
    CHECK_THROWS_AS(beam_similarity(w_fd, p, ComplexMatrix::Zero(2, 2)), DimensionError);
}

TEST_CASE("power_spectrum - normalization and phase invariance") {
    std::mt19937_64 rng(36);
    const auto tx = ula_at_origin(16, half_lambda);
    std::vector<PolarLocation> grid;
    for (int a = -5; a <= 5; ++a)
        for (double d : {2.0, 5.0, 9.0}) grid.push_back({d, 0.1 * a});
    const ComplexMatrix p = testing::random_phases(16, 4, rng);
    const ComplexMatrix w = testing::randn(4, 2, rng);
    const auto s = power_spectrum(p, w, tx, 28e9, grid);
    REQUIRE(s.size() == grid.size());
    double mx = 0.0;
    for (const auto& pt : s) {
        CHECK(pt.power >= 0.0);
        CHECK(pt.power <= 1.0);
        mx = std::max(mx, pt.power);
    }
    CHECK(mx == 1.0);

    const auto s2 = power_spectrum(p, w * std::polar(1.0, 1.234), tx, 28e9, grid);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(s[i].power - s2[i].power) <= 1e-12);
}

TEST_CASE("power_spectrum - matched beam peaks at its focal point") {
    const auto tx = ula_at_origin(64, half_lambda);
    const PolarLocation focus{3.0, deg2rad(30.0)};
    const ComplexMatrix h = nearfield_channel(tx, ula_at(1, half_lambda, focus), 28e9).matrix;
    std::vector<PolarLocation> grid;
    for (int a = 20; a <= 40; a += 2) grid.push_back({3.0, deg2rad(a)});
    const auto s = power_spectrum(ComplexMatrix::Identity(64, 64), h.adjoint(), tx, 28e9, grid);
    const auto it = std::max_element(s.begin(), s.end(),
                                     [](auto& a, auto& b) { return a.power < b.power; });
    CHECK(std::abs(it->location.azimuth - focus.azimuth) < 1e-12);
}

TEST_CASE("power_spectrum - errors") {
    const auto tx = ula_at_origin(4, half_lambda);
    const ComplexMatrix p = ComplexMatrix::Ones(4, 2);
    CHECK_THROWS_AS(power_spectrum(p, ComplexMatrix::Ones(2, 1), tx, 28e9, {}), ArgumentError);
    CHECK_THROWS_AS(power_spectrum(p, ComplexMatrix::Zero(2, 1), tx, 28e9, {{5.0, 0.0}}), DomainError);
    CHECK_THROWS_AS(power_spectrum(p, ComplexMatrix::Ones(3, 1), tx, 28e9, {{5.0, 0.0}}), DimensionError);
    CHECK_THROWS_AS(power_spectrum(p, ComplexMatrix::Ones(2, 1), tx, 28e9, {{0.0, 0.0}}), GeometryError);
}
