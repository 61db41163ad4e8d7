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

#include <Eigen/Dense>

#include "nearsec/numerics.hpp"

namespace nearsec {

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double wavelength(double f_hz) { return kSpeedOfLight / f_hz; }
inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Uniform linear array. Element m sits at center + (m - (n-1)/2) * spacing * axis.
struct ArrayGeometry {
    std::size_t num_elements = 1;
    double spacing = 0.0;  // meters
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    Eigen::Vector3d axis = Eigen::Vector3d::UnitY();

    // Signed index offset from the array midpoint (half-integer for even sizes).
    double offset(std::size_t m) const {
        return static_cast<double>(m) - 0.5 * (static_cast<double>(num_elements) - 1.0);
    }
    Eigen::Vector3d element(std::size_t m) const { return center + offset(m) * spacing * axis; }
    double aperture() const { return (static_cast<double>(num_elements) - 1.0) * spacing; }

    // Throws GeometryError unless spacing > 0, num_elements >= 1 and axis is unit length.
    void validate() const;
};

// Position of an array midpoint relative to the transmitter midpoint, in the
// x-y plane. The azimuth is measured from the x axis (broadside of a y-axis
// array), so the midpoint is at (d cos az, d sin az, 0).
struct PolarLocation {
    double distance = 1.0;  // meters
    double azimuth = 0.0;   // radians, in (-pi/2, pi/2)

    Eigen::Vector3d cartesian() const;
    void validate() const;
};

enum class ChannelModel { kNearField, kFarField };

// Physical (not noise-normalized) channel, receive antennas x transmit antennas.
struct ChannelMatrix {
    ComplexMatrix matrix;
    double carrier_frequency = 0.0;
    ChannelModel model = ChannelModel::kNearField;
    ArrayGeometry tx;
    ArrayGeometry rx;

    Eigen::Index rx_count() const { return matrix.rows(); }
    Eigen::Index tx_count() const { return matrix.cols(); }
};

// y-axis ULA whose midpoint sits at `location`.
ArrayGeometry ula_at(std::size_t num_elements, double spacing, const PolarLocation& location);

// y-axis ULA centred on the origin (the transmitter convention).
ArrayGeometry ula_at_origin(std::size_t num_elements, double spacing);

// Euclidean distance between transmit element `tx_index` and the receive
// element `rx_offset` element pitches away from a receive-array midpoint at
// `rx_location`. The receive array is parallel to the transmit axis.
double pair_distance(const ArrayGeometry& tx, std::size_t tx_index, const PolarLocation& rx_location,
                     double rx_offset, double spacing);

// Law-of-cosines form: sqrt(r^2 + t^2 - 2 t r sin(az)), where r/az locate the
// receive element relative to the transmit midpoint and t is the signed
// along-axis position of the transmit element. Only valid for a transmit
// array on the y axis centred at the origin.
double polar_pair_distance(double ref_distance, double azimuth, double tx_position);

// Spherical-wave line-of-sight channel. Entry (r, t):
//   (1/sqrt(M)) * c / (4 pi f d_rt) * exp(-j 2 pi f / c * (d_rt - d_r))
// where d_r is the distance from the transmit midpoint to receive element r.
ChannelMatrix nearfield_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double f_hz);

// Planar-wave baseline with common path loss at the receive-midpoint distance
// d_ref and the midpoint azimuth az:
//   (1/sqrt(M)) * c / (4 pi f d_ref) * exp(+j k t_m sin az) * exp(-j k r_n sin az)
// with t_m, r_n the signed along-axis element positions and k = 2 pi f / c.
// The transmit phase matches the first-order expansion of the near-field
// model; the receive phase is the usual arrival progression (a per-row unit
// factor that leaves every capacity unchanged).
ChannelMatrix farfield_channel(const ArrayGeometry& tx, const ArrayGeometry& rx, double f_hz);

ChannelMatrix make_channel(ChannelModel model, const ArrayGeometry& tx, const ArrayGeometry& rx,
                           double f_hz);

// 2 (D1 + D2)^2 / lambda.
double rayleigh_distance(double aperture_tx, double aperture_rx, double f_hz);

}  // namespace nearsec
