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

#include <complex>

#include <Eigen/Dense>

namespace nearsec {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Eigenpairs of a Hermitian matrix: A = Q diag(values) Q^H, values ascending.
struct HermitianEigen {
    RealVector values;
    ComplexMatrix vectors;
};

// (A + A^H) / 2. Throws DimensionError if A is not square.
ComplexMatrix symmetrize(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

// Eigendecomposition of a Hermitian matrix. The input is symmetrized first so
// round-off asymmetry from iterative updates is absorbed.
HermitianEigen hermitian_eig(const ComplexMatrix& a);

// ln det(A) for Hermitian positive-definite A, via Cholesky. Throws
// DomainError naming the smallest eigenvalue when A is not positive definite.
double logdet_hpd(const ComplexMatrix& a);

// Solves A X = B for Hermitian positive-definite A (Cholesky plus one step of
// iterative refinement).
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);

// Inverse of a Hermitian positive-definite matrix, returned exactly Hermitian.
ComplexMatrix inverse_hpd(const ComplexMatrix& a);

// Squared Frobenius norm.
inline double frob2(const ComplexMatrix& a) { return a.squaredNorm(); }

}  // namespace nearsec
