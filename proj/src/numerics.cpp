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

#include "nearsec/numerics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nearsec/error.hpp"

namespace nearsec {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw DimensionError(fmt::format("{}: expected a non-empty square matrix, got {}x{}", op,
                                         a.rows(), a.cols()));
    }
}

void require_finite(const ComplexMatrix& a, const char* op) {
    if (!all_finite(a)) {
        throw DomainError(fmt::format("{}: input has non-finite entries", op));
    }
}

double smallest_eigenvalue(const ComplexMatrix& a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(symmetrize(a), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

}  // namespace

ComplexMatrix symmetrize(const ComplexMatrix& a) {
    require_square(a, "symmetrize");
    return 0.5 * (a + a.adjoint());
}

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
        }
    }
    return true;
}

HermitianEigen hermitian_eig(const ComplexMatrix& a) {
    require_square(a, "hermitian_eig");
    require_finite(a, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(symmetrize(a));
    if (es.info() != Eigen::Success) {
        // Eigen's QR iteration gives up after 30*n sweeps.
        throw NumericalError(fmt::format("hermitian_eig: no convergence after {} iterations",
                                         30 * a.rows()));
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

double logdet_hpd(const ComplexMatrix& a) {
    require_square(a, "logdet_hpd");
    require_finite(a, "logdet_hpd");
    const ComplexMatrix s = symmetrize(a);
    Eigen::LLT<ComplexMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
        throw DomainError(fmt::format("logdet_hpd: matrix is not positive definite "
                                      "(smallest eigenvalue {:.6g})",
                                      smallest_eigenvalue(s)));
    }
    const auto diag = llt.matrixLLT().diagonal();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        const double lii = diag(i).real();
        if (!(lii > 0.0)) {
            throw DomainError(fmt::format("logdet_hpd: leading minor {} is not positive", i + 1));
        }
        acc += std::log(lii);
    }
    return 2.0 * acc;
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "solve_hpd");
    if (b.rows() != a.rows()) {
        throw DimensionError(fmt::format("solve_hpd: A is {}x{} but B has {} rows", a.rows(),
                                         a.cols(), b.rows()));
    }
    require_finite(a, "solve_hpd");
    require_finite(b, "solve_hpd");
    const ComplexMatrix s = symmetrize(a);
    Eigen::LLT<ComplexMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
        throw DomainError(fmt::format("solve_hpd: matrix is singular or indefinite "
                                      "(smallest eigenvalue {:.6g})",
                                      smallest_eigenvalue(s)));
    }
    ComplexMatrix x = llt.solve(b);
    x += llt.solve(b - s * x);
    if (!all_finite(x)) throw DomainError("solve_hpd: solution is not finite");
    return x;
}

ComplexMatrix inverse_hpd(const ComplexMatrix& a) {
    const auto n = a.rows();
    return symmetrize(solve_hpd(a, ComplexMatrix::Identity(n, n)));
}

}  // namespace nearsec
