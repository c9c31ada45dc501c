// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded samplers for test fixtures and the invariant runner.

#include <array>
#include <random>

#include "qcorr/states.hpp"

namespace qcorr::sampling {

using Rng = std::mt19937_64;

template <typename Engine>
CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Engine& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return g;
}

/// Unit vector uniform on the complex sphere.
template <typename Engine>
CVector random_pure_vector(Eigen::Index dim, Engine& rng) {
    CVector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

/// G G^dagger / Tr with G a dim x rank Ginibre matrix.
template <typename Engine>
CMatrix random_density(Eigen::Index dim, Engine& rng, Eigen::Index rank = -1) {
    const CMatrix g = ginibre(dim, rank < 1 ? dim : rank, rng);
    CMatrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

template <typename Engine>
BipartiteState random_state(Eigen::Index m, Eigen::Index n, Engine& rng) {
    return BipartiteState(m, n, random_density(m * n, rng));
}

template <typename Engine>
BipartiteState random_product_state(Eigen::Index m, Eigen::Index n, Engine& rng) {
    return BipartiteState(m, n, linalg::kron(random_density(m, rng), random_density(n, rng)));
}

template <typename Engine>
BipartiteState random_pure_state(Eigen::Index m, Eigen::Index n, Engine& rng) {
    return states::from_pure(random_pure_vector(m * n, rng), m, n);
}

/// Correlation vector of a uniformly weighted random Bell-diagonal state.
template <typename Engine>
std::array<double, 3> random_bell_c(Engine& rng) {
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> p{};
    double total = 0.0;
    for (auto& w : p) total += (w = expo(rng));
    for (auto& w : p) w /= total;
    // inverse of states::bell_weights
    return {p[0] - p[1] + p[2] - p[3], -p[0] + p[1] + p[2] - p[3], p[0] + p[1] - p[2] - p[3]};
}

}  // namespace qcorr::sampling
