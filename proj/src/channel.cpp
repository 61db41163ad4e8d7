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

#include "nearsec/channel.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nearsec/error.hpp"

namespace nearsec {

namespace {

constexpr double kMinDistance = 1e-12;

void require_positive_frequency(double f_hz) {
    if (!(f_hz > 0.0) || !std::isfinite(f_hz)) {
        throw ArgumentError(fmt::format("carrier frequency must be positive, got {}", f_hz));
    }
}

double checked_distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const double d = (a - b).norm();
    if (!(d > kMinDistance)) {
        throw GeometryError(fmt::format("co-located elements (distance {:.3g} m)", d));
    }
    return d;
}

}  // namespace

void ArrayGeometry::validate() const {
    if (num_elements < 1) throw GeometryError("array needs at least one element");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw GeometryError(fmt::format("element spacing must be positive, got {}", spacing));
    }
    if (std::abs(axis.norm() - 1.0) > 1e-12) throw GeometryError("array axis must be a unit vector");
}

Eigen::Vector3d PolarLocation::cartesian() const {
    return {distance * std::cos(azimuth), distance * std::sin(azimuth), 0.0};
}

void PolarLocation::validate() const {
    if (!(distance > 0.0) || !std::isfinite(distance)) {
        throw GeometryError(fmt::format("distance must be positive, got {}", distance));
    }
    if (!(std::abs(azimuth) < 0.5 * kPi)) {
        throw GeometryError(fmt::format("azimuth must lie in (-pi/2, pi/2), got {}", azimuth));
    }
}

ArrayGeometry ula_at(std::size_t num_elements, double spacing, const PolarLocation& location) {
    location.validate();
    ArrayGeometry g{num_elements, spacing, location.cartesian(), Eigen::Vector3d::UnitY()};
    g.validate();
    return g;
}

ArrayGeometry ula_at_origin(std::size_t num_elements, double spacing) {
    ArrayGeometry g{num_elements, spacing, Eigen::Vector3d::Zero(), Eigen::Vector3d::UnitY()};
    g.validate();
    return g;
}

double pair_distance(const ArrayGeometry& tx, std::size_t tx_index, const PolarLocation& rx_location,
                     double rx_offset, double spacing) {
    tx.validate();
    if (tx_index >= tx.num_elements) {
        throw GeometryError(fmt::format("transmit index {} out of range [0, {})", tx_index,
                                        tx.num_elements));
    }
    const Eigen::Vector3d rx = rx_location.cartesian() + rx_offset * spacing * tx.axis;
    return checked_distance(tx.element(tx_index), rx);
}

double polar_pair_distance(double ref_distance, double azimuth, double tx_position) {
    const double d2 = ref_distance * ref_distance + tx_position * tx_position -
                      2.0 * tx_position * ref_distance * std::sin(azimuth);
    if (!(d2 > kMinDistance * kMinDistance)) {
        throw GeometryError("co-located elements");
    }
    return std::sqrt(d2);
}

ChannelMatrix nearfield_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double f_hz) {
    require_positive_frequency(f_hz);
    tx.validate();
    rx.validate();
    const double k = 2.0 * kPi * f_hz / kSpeedOfLight;
    const double scale = 1.0 / std::sqrt(static_cast<double>(tx.num_elements));
    const double gain = kSpeedOfLight / (4.0 * kPi * f_hz);

    ChannelMatrix h;
    h.matrix.resize(static_cast<Eigen::Index>(rx.num_elements),
                    static_cast<Eigen::Index>(tx.num_elements));
    for (std::size_t r = 0; r < rx.num_elements; ++r) {
        const Eigen::Vector3d rx_pos = rx.element(r);
        const double ref = checked_distance(rx_pos, tx.center);
        for (std::size_t t = 0; t < tx.num_elements; ++t) {
            const Eigen::Vector3d e = tx.element(t) - tx.center;
            const double d = checked_distance(rx_pos, tx.element(t));
            // d - ref = (d^2 - ref^2) / (d + ref) avoids cancelling two large
            // distances; k*d is thousands of radians. Midpoint column: exactly 0.
            const double diff = (e.squaredNorm() - 2.0 * (rx_pos - tx.center).dot(e)) / (d + ref);
            h.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                std::polar(scale * gain / d, -k * diff);
        }
    }
    h.carrier_frequency = f_hz;
    h.model = ChannelModel::kNearField;
    h.tx = tx;
    h.rx = rx;
    return h;
}

ChannelMatrix farfield_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double f_hz) {
    require_positive_frequency(f_hz);
    tx.validate();
    rx.validate();
    const Eigen::Vector3d rel = rx.center - tx.center;
    const double d_ref = rel.norm();
    if (!(d_ref > kMinDistance)) throw GeometryError("receiver midpoint coincides with transmitter");
    // Sine of the azimuth measured from broadside of the transmit axis.
    const double sin_az = rel.dot(tx.axis) / d_ref;
    const double k = 2.0 * kPi * f_hz / kSpeedOfLight;
    const double amp = kSpeedOfLight / (4.0 * kPi * f_hz * d_ref) /
                       std::sqrt(static_cast<double>(tx.num_elements));

    ChannelMatrix h;
    h.matrix.resize(static_cast<Eigen::Index>(rx.num_elements),
                    static_cast<Eigen::Index>(tx.num_elements));
    for (std::size_t r = 0; r < rx.num_elements; ++r) {
        const double rx_pos = rx.offset(r) * rx.spacing;
        for (std::size_t t = 0; t < tx.num_elements; ++t) {
            const double tx_pos = tx.offset(t) * tx.spacing;
            h.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                std::polar(amp, k * (tx_pos - rx_pos) * sin_az);
        }
    }
    h.carrier_frequency = f_hz;
    h.model = ChannelModel::kFarField;
    h.tx = tx;
    h.rx = rx;
    return h;
}

ChannelMatrix make_channel(ChannelModel model, const ArrayGeometry& tx, const ArrayGeometry& rx,
                           double f_hz) {
    return model == ChannelModel::kNearField ? nearfield_channel(tx, rx, f_hz)
                                             : farfield_channel(tx, rx, f_hz);
}

double rayleigh_distance(double aperture_tx, double aperture_rx, double f_hz) {
    require_positive_frequency(f_hz);
    if (aperture_tx < 0.0 || aperture_rx < 0.0) {
        throw ArgumentError("apertures must be non-negative");
    }
    const double sum = aperture_tx + aperture_rx;
    return 2.0 * sum * sum / wavelength(f_hz);
}

}  // namespace nearsec
