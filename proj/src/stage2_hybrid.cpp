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

#include "nearsec/stage2_hybrid.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nearsec/error.hpp"
#include "nearsec/log.hpp"
#include "nearsec/metrics.hpp"

namespace nearsec {

ComplexMatrix ls_digital(const ComplexMatrix& p, const ComplexMatrix& w_fd) {
    if (p.rows() != w_fd.rows()) {
        throw DimensionError(fmt::format("ls_digital: P is {}x{} but W_fd has {} rows", p.rows(),
                                         p.cols(), w_fd.rows()));
    }
    const ComplexMatrix gram = symmetrize(p.adjoint() * p);
    const ComplexMatrix rhs = p.adjoint() * w_fd;
    const auto eig = hermitian_eig(gram);
    const double top = eig.values(eig.values.size() - 1);
    if (eig.values(0) > 1e-10 * top) return solve_hpd(gram, rhs);

    warn(fmt::format("ls_digital: P^H P is rank deficient (eigenvalues {:.3g}..{:.3g}), "
                     "regularizing",
                     eig.values(0), top));
    const double delta = 1e-10 * std::max(top, 1.0);
    return solve_hpd(gram + delta * ComplexMatrix::Identity(gram.rows(), gram.cols()), rhs);
}

Complex unit_modulus_maximizer(Complex z, Complex fallback) {
    const double mag = std::abs(z);
    if (mag == 0.0) return fallback;
    return std::conj(z) / mag;
}

Complex phase_coefficient(const ComplexMatrix& p, Eigen::Index i, Eigen::Index j,
                          const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.rows() != p.cols() || x.cols() != p.cols() || y.rows() != p.rows() ||
        y.cols() != p.cols() || i < 0 || j < 0 || i >= p.rows() || j >= p.cols()) {
        throw DimensionError("phase_coefficient: inconsistent P, X, Y or index");
    }
    const Complex others = (p.row(i) * x.col(j)).value() - p(i, j) * x(j, j);
    return std::conj(y(i, j) - others);
}

Complex phase_coordinate_update(const ComplexMatrix& p, Eigen::Index i, Eigen::Index j,
                                const ComplexMatrix& x, const ComplexMatrix& y) {
    return unit_modulus_maximizer(phase_coefficient(p, i, j, x, y), p(i, j));
}

ComplexMatrix power_rescale(const ComplexMatrix& p, const ComplexMatrix& w, double p_max) {
    const double power = (p * w).squaredNorm();
    if (power <= p_max || power == 0.0) return w;
    return w * std::sqrt(p_max / power);
}

ComplexMatrix initial_analog(const ComplexMatrix& w_fd, std::size_t num_rf_chains,
                             std::mt19937_64& rng) {
    const auto m = w_fd.rows();
    const auto k = w_fd.cols();
    const auto mr = static_cast<Eigen::Index>(num_rf_chains);
    if (mr < 1 || mr > m) throw ArgumentError("initial_analog: need 1 <= M_R <= M");
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    auto random_column = [&](Eigen::Index j, ComplexMatrix& p) {
        for (Eigen::Index i = 0; i < m; ++i) p(i, j) = std::polar(1.0, phase(rng));
    };
    ComplexMatrix p(m, mr);
    for (Eigen::Index j = 0; j < mr; ++j) {
        if (j >= k) {
            random_column(j, p);
            continue;
        }
        for (Eigen::Index i = 0; i < m; ++i) {
            p(i, j) = w_fd(i, j) != Complex(0.0, 0.0) ? std::polar(1.0, std::arg(w_fd(i, j)))
                                                      : std::polar(1.0, phase(rng));
        }
        // A nearly rank-one W_fd gives columns that differ by a constant
        // phase; keep P^H P well conditioned.
        for (Eigen::Index l = 0; l < j; ++l) {
            const double overlap =
                std::abs(p.col(l).dot(p.col(j))) / static_cast<double>(m);
            if (overlap > 0.99) {
                random_column(j, p);
                break;
            }
        }
    }
    return p;
}

AoOptions ao_options(const SystemConfig& config, const ChannelMatrix* h_u,
                     const ChannelMatrix* h_e) {
    AoOptions o;
    o.eps2 = config.eps2;
    o.max_iters = config.max_ao_iters;
    o.stopping = config.ao_stopping;
    o.h_u = h_u;
    o.h_e = h_e;
    o.noise_power = config.noise_power();
    o.p_max = config.p_max();
    return o;
}

HybridResult ao_project(const ComplexMatrix& w_fd, const AoOptions& options,
                        const ComplexMatrix& initial_p) {
    if (initial_p.rows() != w_fd.rows() || initial_p.cols() < w_fd.cols()) {
        throw DimensionError(fmt::format("ao_project: P is {}x{} but W_fd is {}x{}",
                                         initial_p.rows(), initial_p.cols(), w_fd.rows(),
                                         w_fd.cols()));
    }
    for (Eigen::Index j = 0; j < initial_p.cols(); ++j) {
        for (Eigen::Index i = 0; i < initial_p.rows(); ++i) {
            if (std::abs(std::abs(initial_p(i, j)) - 1.0) > 1e-12) {
                throw DomainError("ao_project: initial analog precoder is not unit-modulus");
            }
        }
    }
    const bool secrecy_stop = options.stopping == AoStopping::kSecrecy;
    if (secrecy_stop && (options.h_u == nullptr || options.h_e == nullptr)) {
        throw ArgumentError("ao_project: secrecy stopping needs both channels");
    }
    if (secrecy_stop && !(options.noise_power > 0.0)) {
        throw ArgumentError("ao_project: secrecy stopping needs a positive noise power");
    }

    const double fd_energy = w_fd.squaredNorm();
    ComplexMatrix p = initial_p;
    ComplexMatrix w = ls_digital(p, w_fd);
    HybridResult out;
    auto notify = [&](AoEvent::Kind kind, std::size_t it, Eigen::Index i, Eigen::Index j) {
        if (options.observer) {
            options.observer({kind, it, i, j, &p, &w, beam_similarity(w_fd, p, w)});
        }
    };
    // Unclipped C_U - C_E, so a stretch with C_U < C_E does not look converged.
    auto secrecy = [&] {
        const ComplexMatrix eff = p * w;
        return mutual_information(*options.h_u, eff, options.noise_power) -
               mutual_information(*options.h_e, eff, options.noise_power);
    };

    notify(AoEvent::Kind::kDigital, 0, -1, -1);
    out.residual.push_back(beam_similarity(w_fd, p, w));
    if (secrecy_stop) out.c_s.push_back(secrecy());

    const auto m = p.rows();
    const auto mr = p.cols();
    for (std::size_t it = 1; it <= options.max_iters; ++it) {
        const ComplexMatrix x = w * w.adjoint();
        const ComplexMatrix y = w_fd * w.adjoint();
        ComplexMatrix px = p * x;  // kept in sync with single-entry changes of P
        for (Eigen::Index i = 0; i < m; ++i) {
            for (Eigen::Index j = 0; j < mr; ++j) {
                const Complex z = std::conj(y(i, j) - (px(i, j) - p(i, j) * x(j, j)));
                const Complex updated = unit_modulus_maximizer(z, p(i, j));
                const Complex delta = updated - p(i, j);
                if (delta != Complex(0.0, 0.0)) {
                    px.row(i) += delta * x.row(j);
                    p(i, j) = updated;
                }
                notify(AoEvent::Kind::kPhase, it, i, j);
            }
        }
        w = ls_digital(p, w_fd);
        notify(AoEvent::Kind::kDigital, it, -1, -1);
        out.iterations = it;

        const double residual = beam_similarity(w_fd, p, w);
        const double prev_residual = out.residual.back();
        out.residual.push_back(residual);
        bool done;
        if (secrecy_stop) {
            const double cs = secrecy();
            done = std::abs(cs - out.c_s.back()) <= options.eps2;
            out.c_s.push_back(cs);
        } else {
            done = std::abs(prev_residual - residual) <= options.eps2 * fd_energy;
        }
        if (done) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged) {
        warn(fmt::format("ao_project: no convergence within {} iterations", options.max_iters));
    }

    if (secrecy_stop) out.c_s_before_rescale = std::max(out.c_s.back(), 0.0);
    ComplexMatrix w_final = w;
    if (options.p_max > 0.0) {
        w_final = power_rescale(p, w, options.p_max);
        const double before = w.norm();
        out.rescale_factor = before > 0.0 ? w_final.norm() / before : 1.0;
    }
    out.beamformer = {std::move(p), std::move(w_final)};
    out.final_residual = beam_similarity(w_fd, out.beamformer.p, out.beamformer.w);
    return out;
}

}  // namespace nearsec
