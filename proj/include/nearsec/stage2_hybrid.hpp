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
#include <functional>
#include <random>
#include <vector>

#include "nearsec/channel.hpp"
#include "nearsec/config.hpp"
#include "nearsec/numerics.hpp"

// Stage II: projection of a fully-digital beamformer onto the hybrid set
// {P W : |P_ij| = 1} by alternating a least-squares digital precoder with a
// sweep of exact per-entry phase updates. Each step minimizes
// ||W_fd - P W||_F^2 over its block, so the residual never increases.
namespace nearsec {

struct HybridBeamformer {
    ComplexMatrix p;  // M x M_R, unit-modulus entries
    ComplexMatrix w;  // M_R x K

    ComplexMatrix effective() const { return p * w; }
};

// argmin_W ||W_fd - P W||_F^2 = (P^H P)^{-1} P^H W_fd. A rank-deficient P^H P
// is regularized (with a warning).
ComplexMatrix ls_digital(const ComplexMatrix& p, const ComplexMatrix& w_fd);

// argmax_{|p| = 1} Re(z p) = conj(z) / |z|. Returns `fallback` when z == 0.
Complex unit_modulus_maximizer(Complex z, Complex fallback);

// Coefficient z of the single-entry problem max_{|p|=1} Re(z p) obtained by
// restricting Tr(P^H P X) - 2 Re Tr(P^H Y) to entry (i, j):
//   z = conj(Y_ij - (P X)_ij + P_ij X_jj).
// X = W W^H (M_R x M_R), Y = W_fd W^H (M x M_R).
Complex phase_coefficient(const ComplexMatrix& p, Eigen::Index i, Eigen::Index j,
                          const ComplexMatrix& x, const ComplexMatrix& y);

// Globally optimal unit-modulus value of entry (i, j) with the rest of P
// fixed; keeps the current entry when the coordinate objective is flat.
Complex phase_coordinate_update(const ComplexMatrix& p, Eigen::Index i, Eigen::Index j,
                                const ComplexMatrix& x, const ComplexMatrix& y);

// W * min(1, sqrt(p_max / ||P W||_F^2)).
ComplexMatrix power_rescale(const ComplexMatrix& p, const ComplexMatrix& w, double p_max);

// Columns j < K take the phases of W_fd's column j; the remaining M_R - K
// columns get uniformly random phases (a copy of an earlier column would make
// P^H P singular). A matched column nearly parallel to an earlier one, and any
// zero entry of W_fd, also falls back to random phases.
ComplexMatrix initial_analog(const ComplexMatrix& w_fd, std::size_t num_rf_chains,
                             std::mt19937_64& rng);

// Observer hook fired after every block update with the current residual.
struct AoEvent {
    enum class Kind { kDigital, kPhase } kind;
    std::size_t iteration;
    Eigen::Index i = -1;  // entry touched by a phase update
    Eigen::Index j = -1;
    const ComplexMatrix* p;
    const ComplexMatrix* w;
    double residual;
};
using AoObserver = std::function<void(const AoEvent&)>;

struct AoOptions {
    double eps2 = 1e-6;
    std::size_t max_iters = 500;
    AoStopping stopping = AoStopping::kResidual;
    // Required for AoStopping::kSecrecy.
    const ChannelMatrix* h_u = nullptr;
    const ChannelMatrix* h_e = nullptr;
    double noise_power = 0.0;
    double p_max = 0.0;  // <= 0 disables the final power rescale
    AoObserver observer;
};

AoOptions ao_options(const SystemConfig& config, const ChannelMatrix* h_u = nullptr,
                     const ChannelMatrix* h_e = nullptr);

struct HybridResult {
    HybridBeamformer beamformer;       // after power_rescale
    std::vector<double> residual;      // D_E: entry 0 at the initial P, then one per iteration
    std::vector<double> c_s;           // C_U - C_E trace, unclipped (secrecy stopping only)
    std::size_t iterations = 0;
    bool converged = false;
    double final_residual = 0.0;       // D_E of the rescaled pair
    double rescale_factor = 1.0;       // multiplier applied to W by power_rescale
    double c_s_before_rescale = 0.0;   // secrecy stopping only
};

// Alternates ls_digital and a row-major sweep of phase_coordinate_update
// until the stopping quantity changes by at most eps2 (secrecy rate in
// bits/s/Hz, or residual relative to ||W_fd||_F^2), then rescales W into the
// power budget.
HybridResult ao_project(const ComplexMatrix& w_fd, const AoOptions& options,
                        const ComplexMatrix& initial_p);

}  // namespace nearsec
