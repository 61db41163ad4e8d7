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
#include <vector>

#include "nearsec/channel.hpp"
#include "nearsec/config.hpp"
#include "nearsec/numerics.hpp"

// Stage I: fully-digital secrecy-rate maximization.
//
// The secrecy rate ln det(I + Hu W W^H Hu^H) - ln det(I + He W W^H He^H) is
// replaced by its variational lower bound
//
//   ln det(Vu) - Tr(Vu F(U, W)) + K + ln det(Ve) - Tr(Ve (I + He W W^H He^H)) + M_E,
//   F(U, W) = (I - U^H Hu W)(I - U^H Hu W)^H + U^H U,
//
// which is tight at the closed-form optimal U, Vu, Ve. Block coordinate
// ascent over {U}, {Vu, Ve}, {W} then increases the secrecy rate
// monotonically. Everything in this header works on noise-normalized
// channels (H / sigma) and in nats, except bcd_optimize, which takes the
// physical channels and reports bits.
namespace nearsec {

struct AuxVariables {
    ComplexMatrix u;    // M_U x K
    ComplexMatrix v_u;  // K x K, HPD
    ComplexMatrix v_e;  // M_E x M_E, HPD
};

struct TracePoint {
    double c_s = 0.0;        // bits/s/Hz, clipped at zero
    double c_s_raw = 0.0;    // C_U - C_E in bits/s/Hz, may be negative
    double surrogate = 0.0;  // nats
    double mu = 0.0;         // multiplier of the power constraint
    double power = 0.0;      // watts
    std::size_t bisection_steps = 0;
};

struct FDState {
    ComplexMatrix w_fd;  // M x K
    AuxVariables aux;
    double surrogate_value = 0.0;
    double c_s = 0.0;
    double mu = 0.0;
    std::vector<TracePoint> trace;  // entry 0 is the initial point
    std::size_t iterations = 0;
    bool converged = false;
};

// F(U, W) = (I - U^H H W)(I - U^H H W)^H + U^H U.
ComplexMatrix mse_matrix(const ComplexMatrix& h_u, const ComplexMatrix& u, const ComplexMatrix& w);

double surrogate_objective(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                           const ComplexMatrix& w, const AuxVariables& aux);

// (I + H W W^H H^H)^{-1} H W.
ComplexMatrix update_U(const ComplexMatrix& h_u, const ComplexMatrix& w);

// Vu = F(U, W)^{-1}, Ve = (I + He W W^H He^H)^{-1}. A numerically singular F
// gets 1e-12 I added before inversion (with a warning).
struct VPair {
    ComplexMatrix v_u;
    ComplexMatrix v_e;
};
VPair update_V(const ComplexMatrix& h_u, const ComplexMatrix& h_e, const ComplexMatrix& u,
               const ComplexMatrix& w);

// Power-constrained W block. With A = Hu^H U Vu U^H Hu + He^H Ve He and
// B = Hu^H U Vu, the minimizer is W(mu) = (A + mu I)^{-1} B for the smallest
// mu >= 0 with Tr(W W^H) <= p_max. mu is found by bisection on
// [0, ||B||_F / sqrt(p_max)], reusing one eigendecomposition of A.
struct WUpdate {
    ComplexMatrix w;
    double mu = 0.0;
    double power = 0.0;
    std::size_t bisection_steps = 0;
    bool constraint_active = false;
};
WUpdate update_W_fd(const ComplexMatrix& h_u, const ComplexMatrix& h_e, const AuxVariables& aux,
                    double p_max, double eps3);

// Quadratic W-subproblem data, exposed for oracles and stationarity checks.
struct WSubproblem {
    ComplexMatrix a;  // M x M Hermitian PSD
    ComplexMatrix b;  // M x K
};
WSubproblem w_subproblem(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                         const AuxVariables& aux);

// Objective of the W-subproblem: Tr(Vu F(U, W)) + Tr(Ve (I + He W W^H He^H)).
double w_subproblem_objective(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                              const AuxVariables& aux, const ComplexMatrix& w);

// Optimal auxiliaries for a fixed W.
AuxVariables optimal_aux(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                         const ComplexMatrix& w);

// Complex Gaussian M x K matrix scaled to ||W||_F^2 = p_max.
template <class Rng>
ComplexMatrix random_beamformer(Eigen::Index m, Eigen::Index k, double p_max, Rng& rng);

// Runs BCD from `initial_w` (rescaled into the power budget if needed) until
// |Delta (C_U - C_E)| <= eps1 or max_bcd_iters. The stopping test uses the
// unclipped difference so that a start with C_U < C_E does not stall.
FDState bcd_optimize(const ChannelMatrix& h_u, const ChannelMatrix& h_e, const SystemConfig& config,
                     const ComplexMatrix& initial_w);

}  // namespace nearsec

#include "nearsec/detail/random_beamformer.ipp"
