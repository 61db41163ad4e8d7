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

#include "nearsec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nearsec/error.hpp"

namespace nearsec {

double mutual_information(const ComplexMatrix& h, const ComplexMatrix& w_eff, double noise_power) {
    if (h.cols() != w_eff.rows()) {
        throw DimensionError(fmt::format("mutual_information: H is {}x{} but W is {}x{}", h.rows(),
                                         h.cols(), w_eff.rows(), w_eff.cols()));
    }
    if (!(noise_power > 0.0)) throw ArgumentError("mutual_information: noise power must be positive");
    const ComplexMatrix hw = h * w_eff;
    const ComplexMatrix gram = ComplexMatrix::Identity(h.rows(), h.rows()) +
                               (hw * hw.adjoint()) / noise_power;
    return std::max(0.0, logdet_hpd(gram) / std::numbers::ln2);
}

double mutual_information(const ChannelMatrix& h, const ComplexMatrix& w_eff, double noise_power) {
    return mutual_information(h.matrix, w_eff, noise_power);
}

double secrecy_capacity(const ChannelMatrix& h_u, const ChannelMatrix& h_e,
                        const ComplexMatrix& w_eff, double noise_power) {
    return evaluate(h_u, h_e, w_eff, noise_power).c_s;
}

SecrecyReport evaluate(const ChannelMatrix& h_u, const ChannelMatrix& h_e,
                       const ComplexMatrix& w_eff, double noise_power) {
    SecrecyReport r;
    r.c_u = mutual_information(h_u, w_eff, noise_power);
    r.c_e = mutual_information(h_e, w_eff, noise_power);
    r.c_s = std::max(r.c_u - r.c_e, 0.0);
    r.transmit_power = frob2(w_eff);
    return r;
}

double beam_similarity(const ComplexMatrix& w_fd, const ComplexMatrix& p, const ComplexMatrix& w) {
    if (p.cols() != w.rows() || p.rows() != w_fd.rows() || w.cols() != w_fd.cols()) {
        throw DimensionError(fmt::format("beam_similarity: W_fd {}x{}, P {}x{}, W {}x{}",
                                         w_fd.rows(), w_fd.cols(), p.rows(), p.cols(), w.rows(),
                                         w.cols()));
    }
    return frob2(w_fd - p * w);
}

std::vector<SpectrumPoint> power_spectrum(const ComplexMatrix& p, const ComplexMatrix& w,
                                          const ArrayGeometry& tx, double f_hz,
                                          const std::vector<PolarLocation>& grid) {
    if (grid.empty()) throw ArgumentError("power_spectrum: empty grid");
    if (p.cols() != w.rows() || p.rows() != static_cast<Eigen::Index>(tx.num_elements)) {
        throw DimensionError("power_spectrum: beamformer does not match the transmit array");
    }
    const ComplexMatrix w_eff = p * w;
    std::vector<SpectrumPoint> out;
    out.reserve(grid.size());
    double peak = 0.0;
    for (const auto& loc : grid) {
        const auto probe = nearfield_channel(tx, ula_at(1, tx.spacing, loc), f_hz);
        const double power = (probe.matrix * w_eff).squaredNorm();
        peak = std::max(peak, power);
        out.push_back({loc, power});
    }
    if (!(peak > 0.0)) throw DomainError("power_spectrum: beamformer radiates no power on the grid");
    for (auto& pt : out) pt.power /= peak;
    return out;
}

}  // namespace nearsec
