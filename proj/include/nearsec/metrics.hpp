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

#include <cmath>
#include <cstddef>
#include <vector>

#include "nearsec/channel.hpp"
#include "nearsec/numerics.hpp"

namespace nearsec {

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// Loop counters of one two-stage run.
struct IterationCounts {
    std::size_t bcd = 0;                   // outer BCD iterations
    std::vector<std::size_t> bisection;    // bisection steps per BCD iteration
    std::size_t ao = 0;                    // AO iterations
};

struct SecrecyReport {
    double c_u = 0.0;             // bits/s/Hz
    double c_e = 0.0;             // bits/s/Hz
    double c_s = 0.0;             // max(c_u - c_e, 0)
    double transmit_power = 0.0;  // watts, ||W_eff||_F^2
    IterationCounts iterations;
};

// log2 det(I + H W W^H H^H / noise_power).
double mutual_information(const ChannelMatrix& h, const ComplexMatrix& w_eff, double noise_power);
double mutual_information(const ComplexMatrix& h, const ComplexMatrix& w_eff, double noise_power);

// [C_U - C_E]^+.
double secrecy_capacity(const ChannelMatrix& h_u, const ChannelMatrix& h_e,
                        const ComplexMatrix& w_eff, double noise_power);

// Capacities and power of an effective beamformer, with zeroed counters.
SecrecyReport evaluate(const ChannelMatrix& h_u, const ChannelMatrix& h_e,
                       const ComplexMatrix& w_eff, double noise_power);

// ||W_fd - P W||_F^2.
double beam_similarity(const ComplexMatrix& w_fd, const ComplexMatrix& p, const ComplexMatrix& w);

struct SpectrumPoint {
    PolarLocation location;
    double power = 0.0;  // normalized to the grid maximum
};

// Received power |h(r, az) P W|^2 of a single-antenna near-field probe at each
// grid location, divided by the grid maximum.
std::vector<SpectrumPoint> power_spectrum(const ComplexMatrix& p, const ComplexMatrix& w,
                                          const ArrayGeometry& tx, double f_hz,
                                          const std::vector<PolarLocation>& grid);

}  // namespace nearsec
