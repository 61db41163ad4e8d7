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
#include <random>

namespace nearsec {

template <class Rng>
ComplexMatrix random_beamformer(Eigen::Index m, Eigen::Index k, double p_max, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    ComplexMatrix w(m, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            w(i, j) = Complex(re, im);
        }
    }
    return w * std::sqrt(p_max / w.squaredNorm());
}

}  // namespace nearsec
