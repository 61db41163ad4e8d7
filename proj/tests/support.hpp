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


// Small helpers shared by the unit tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "nearsec/numerics.hpp"

namespace testing {

using nearsec::Complex;
using nearsec::ComplexMatrix;

inline ComplexMatrix randn(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng,
                           double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale / std::sqrt(2.0));
    ComplexMatrix a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = Complex(n(rng), n(rng));
    return a;
}

// Hermitian positive definite with eigenvalues >= floor.
inline ComplexMatrix random_hpd(Eigen::Index n, std::mt19937_64& rng, double floor = 0.5) {
    const ComplexMatrix g = randn(n, n, rng);
    return g * g.adjoint() + floor * ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix random_phases(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.141592653589793, 3.141592653589793);
    ComplexMatrix a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = std::polar(1.0, u(rng));
    return a;
}

inline bool all_finite_matrix(const ComplexMatrix& a) { return nearsec::all_finite(a); }

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace testing
