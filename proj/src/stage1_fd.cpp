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

#include "nearsec/stage1_fd.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nearsec/error.hpp"
#include "nearsec/log.hpp"
#include "nearsec/metrics.hpp"

namespace nearsec {

namespace {

// Bisection keeps going until the active power constraint is met to this
// relative accuracy, well inside eps3. The BCD ascent step loses at most
// mu * (p_max - power) of surrogate value, so a loose exit would show up as
// small decreases of the secrecy-rate trace.
constexpr double kBisectionRelGap = 1e-12;
constexpr std::size_t kMaxBisectionSteps = 200;
constexpr double kSingularF = 1e-12;

ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

double trace_re(const ComplexMatrix& a) { return a.trace().real(); }

ComplexMatrix covariance(const ComplexMatrix& h, const ComplexMatrix& w) {
    const ComplexMatrix hw = h * w;
    return identity(h.rows()) + hw * hw.adjoint();
}

void check_dims(const ComplexMatrix& h_u, const ComplexMatrix& h_e, const ComplexMatrix& w,
                const char* op) {
    if (h_u.cols() != w.rows() || h_e.cols() != w.rows()) {
        throw DimensionError(fmt::format("{}: channels {}x{} / {}x{} vs beamformer {}x{}", op,
                                         h_u.rows(), h_u.cols(), h_e.rows(), h_e.cols(), w.rows(),
                                         w.cols()));
    }
}

double rate_difference_bits(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                            const ComplexMatrix& w) {
    return (logdet_hpd(covariance(h_u, w)) - logdet_hpd(covariance(h_e, w))) / std::numbers::ln2;
}

}  // namespace

ComplexMatrix mse_matrix(const ComplexMatrix& h_u, const ComplexMatrix& u, const ComplexMatrix& w) {
    if (u.rows() != h_u.rows() || h_u.cols() != w.rows() || u.cols() != w.cols()) {
        throw DimensionError("mse_matrix: inconsistent U, H, W dimensions");
    }
    const ComplexMatrix e = identity(w.cols()) - u.adjoint() * h_u * w;
    return e * e.adjoint() + u.adjoint() * u;
}

double surrogate_objective(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                           const ComplexMatrix& w, const AuxVariables& aux) {
    check_dims(h_u, h_e, w, "surrogate_objective");
    const auto k = static_cast<double>(w.cols());
    const auto m_e = static_cast<double>(h_e.rows());
    const double user = logdet_hpd(aux.v_u) - trace_re(aux.v_u * mse_matrix(h_u, aux.u, w)) + k;
    const double eve = logdet_hpd(aux.v_e) - trace_re(aux.v_e * covariance(h_e, w)) + m_e;
    return user + eve;
}

ComplexMatrix update_U(const ComplexMatrix& h_u, const ComplexMatrix& w) {
    if (h_u.cols() != w.rows()) throw DimensionError("update_U: H and W do not conform");
    return solve_hpd(covariance(h_u, w), h_u * w);
}

VPair update_V(const ComplexMatrix& h_u, const ComplexMatrix& h_e, const ComplexMatrix& u,
               const ComplexMatrix& w) {
    check_dims(h_u, h_e, w, "update_V");
    ComplexMatrix f = symmetrize(mse_matrix(h_u, u, w));
    const double smallest = hermitian_eig(f).values(0);
    if (smallest <= kSingularF) {
        warn(fmt::format("update_V: MSE matrix nearly singular (smallest eigenvalue {:.3g}), "
                         "regularizing",
                         smallest));
        f += kSingularF * identity(f.rows());
    }
    return {inverse_hpd(f), inverse_hpd(covariance(h_e, w))};
}

AuxVariables optimal_aux(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                         const ComplexMatrix& w) {
    AuxVariables aux;
    aux.u = update_U(h_u, w);
    auto v = update_V(h_u, h_e, aux.u, w);
    aux.v_u = std::move(v.v_u);
    aux.v_e = std::move(v.v_e);
    return aux;
}

WSubproblem w_subproblem(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                         const AuxVariables& aux) {
    if (aux.u.rows() != h_u.rows() || aux.v_u.rows() != aux.u.cols() ||
        aux.v_e.rows() != h_e.rows() || h_u.cols() != h_e.cols()) {
        throw DimensionError("w_subproblem: auxiliary variables do not match the channels");
    }
    const ComplexMatrix hu_u = h_u.adjoint() * aux.u;  // M x K
    WSubproblem s;
    s.b = hu_u * aux.v_u;
    s.a = symmetrize(s.b * hu_u.adjoint() + h_e.adjoint() * aux.v_e * h_e);
    return s;
}

double w_subproblem_objective(const ComplexMatrix& h_u, const ComplexMatrix& h_e,
                              const AuxVariables& aux, const ComplexMatrix& w) {
    check_dims(h_u, h_e, w, "w_subproblem_objective");
    return trace_re(aux.v_u * mse_matrix(h_u, aux.u, w)) + trace_re(aux.v_e * covariance(h_e, w));
}

WUpdate update_W_fd(const ComplexMatrix& h_u, const ComplexMatrix& h_e, const AuxVariables& aux,
                    double p_max, double eps3) {
    if (!(p_max > 0.0)) throw ArgumentError("update_W_fd: p_max must be positive");
    if (!(eps3 > 0.0)) throw ArgumentError("update_W_fd: eps3 must be positive");
    const auto sub = w_subproblem(h_u, h_e, aux);
    const auto m = sub.a.rows();
    const auto k = sub.b.cols();

    WUpdate out;
    const double b_norm = sub.b.norm();
    if (b_norm == 0.0) {
        out.w = ComplexMatrix::Zero(m, k);
        return out;
    }

    const auto eig = hermitian_eig(sub.a);
    const RealVector& d = eig.values;
    const ComplexMatrix c = eig.vectors.adjoint() * sub.b;
    RealVector row_energy(m);
    for (Eigen::Index i = 0; i < m; ++i) row_energy(i) = c.row(i).squaredNorm();

    auto power_at = [&](double mu) {
        double p = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            const double denom = d(i) + mu;
            p += row_energy(i) / (denom * denom);
        }
        return p;
    };
    auto beamformer_at = [&](double mu) {
        ComplexMatrix scaled = c;
        for (Eigen::Index i = 0; i < m; ++i) scaled.row(i) /= (d(i) + mu);
        return ComplexMatrix(eig.vectors * scaled);
    };

    // mu = 0: A is rank deficient (rank <= M_U + M_E), but B lies in its
    // range, so the minimum-norm solution drops the numerically-null modes.
    const double null_tol =
        std::max(std::abs(d(m - 1)), 0.0) * static_cast<double>(m) * 1e-14;
    {
        ComplexMatrix scaled = ComplexMatrix::Zero(m, k);
        double p0 = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (d(i) > null_tol) {
                scaled.row(i) = c.row(i) / d(i);
                p0 += row_energy(i) / (d(i) * d(i));
            }
        }
        if (p0 <= p_max) {
            out.w = eig.vectors * scaled;
            out.power = out.w.squaredNorm();
            return out;
        }
    }

    // power(mu) <= ||B||_F^2 / mu^2, so mu_hi starts feasible up to round-off.
    double lo = 0.0;
    double hi = b_norm / std::sqrt(p_max);
    for (int grow = 0; power_at(hi) > p_max; ++grow) {
        if (grow > 60) throw NumericalError("update_W_fd: could not bracket the multiplier");
        lo = hi;
        hi *= 2.0;
    }
    const double tol = std::min(eps3, kBisectionRelGap * p_max);
    std::size_t steps = 0;
    double p_hi = power_at(hi);
    while (p_max - p_hi > tol && steps < kMaxBisectionSteps) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ++steps;
        const double p_mid = power_at(mid);
        if (p_mid <= p_max) {
            hi = mid;
            p_hi = p_mid;
        } else {
            lo = mid;
        }
    }
    out.w = beamformer_at(hi);
    out.mu = hi;
    out.power = out.w.squaredNorm();
    out.bisection_steps = steps;
    out.constraint_active = true;
    return out;
}

FDState bcd_optimize(const ChannelMatrix& h_u, const ChannelMatrix& h_e, const SystemConfig& config,
                     const ComplexMatrix& initial_w) {
    config.validate();
    const auto m = static_cast<Eigen::Index>(config.num_tx);
    const auto k = static_cast<Eigen::Index>(config.num_streams);
    if (h_u.tx_count() != m || h_e.tx_count() != m) {
        throw DimensionError("bcd_optimize: channels do not match num_tx");
    }
    if (initial_w.rows() != m || initial_w.cols() != k) {
        throw DimensionError(fmt::format("bcd_optimize: initial beamformer must be {}x{}", m, k));
    }
    const double sigma = std::sqrt(config.noise_power());
    const double p_max = config.p_max();
    const ComplexMatrix hu = h_u.matrix / sigma;
    const ComplexMatrix he = h_e.matrix / sigma;

    FDState st;
    st.w_fd = initial_w;
    const double p0 = st.w_fd.squaredNorm();
    if (p0 > p_max) st.w_fd *= std::sqrt(p_max / p0);

    auto record = [&](double mu, std::size_t steps) {
        st.aux = optimal_aux(hu, he, st.w_fd);
        st.surrogate_value = surrogate_objective(hu, he, st.w_fd, st.aux);
        const double raw = rate_difference_bits(hu, he, st.w_fd);
        st.c_s = std::max(raw, 0.0);
        st.mu = mu;
        st.trace.push_back({st.c_s, raw, st.surrogate_value, mu, st.w_fd.squaredNorm(), steps});
        return raw;
    };

    double prev = record(0.0, 0);
    for (std::size_t n = 1; n <= config.max_bcd_iters; ++n) {
        auto upd = update_W_fd(hu, he, st.aux, p_max, config.eps3);
        st.w_fd = std::move(upd.w);
        const double raw = record(upd.mu, upd.bisection_steps);
        st.iterations = n;
        if (std::abs(raw - prev) <= config.eps1) {
            st.converged = true;
            break;
        }
        prev = raw;
    }
    if (!st.converged) {
        warn(fmt::format("bcd_optimize: no convergence within {} iterations", config.max_bcd_iters));
    }
    return st;
}

}  // namespace nearsec
