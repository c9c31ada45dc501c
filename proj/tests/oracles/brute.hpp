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

// Brute-force reference implementations used only by tests. They build every
// operator explicitly and share no code path with the library's evaluators.

#include <Eigen/Dense>

#include <cmath>
#include <complex>

namespace qcorr::oracle {

using M = Eigen::MatrixXcd;

inline M kron(const M& a, const M& b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
        for (Eigen::Index j = 0; j < out.cols(); ++j)
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
    return out;
}

inline M trace_out_a(const M& rho, Eigen::Index m, Eigen::Index n) {
    M out = M::Zero(n, n);
    for (Eigen::Index k = 0; k < m; ++k)
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) out(i, j) += rho(k * n + i, k * n + j);
    return out;
}

/// sum_k p_k ||rho_b - rho_b^(k)||^2 via explicit (P_k (x) I) rho (P_k (x) I).
inline double objective(const M& rho, Eigen::Index m, Eigen::Index n, const M& basis) {
    const M rb = trace_out_a(rho, m, n);
    double total = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        const M proj = basis.col(k) * basis.col(k).adjoint();
        const M big = kron(proj, M::Identity(n, n));
        const M post = big * rho * big;
        const double p = post.trace().real();
        if (p <= 1e-12) continue;
        const M cond = trace_out_a(post, m, n) / p;
        double d = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) d += std::norm(rb(i, j) - cond(i, j));
        total += p * d;
    }
    return total;
}

/// Qubit basis with first vector at Bloch angles (theta, phi).
inline M qubit_basis(double theta, double phi) {
    using c = std::complex<double>;
    M b(2, 2);
    b(0, 0) = std::cos(theta / 2);
    b(1, 0) = std::polar(std::sin(theta / 2), phi);
    b(0, 1) = -std::polar(std::sin(theta / 2), -phi);
    b(1, 1) = c(std::cos(theta / 2));
    return b;
}

/// Max of the objective over a theta x phi grid of qubit measurement bases.
inline double q_qubit_grid(const M& rho, Eigen::Index n, int steps) {
    const double pi = std::acos(-1.0);
    double best = 0.0;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j < 2 * steps; ++j)
            best = std::max(best, objective(rho, 2, n,
                                            qubit_basis(pi * i / steps, pi * j / steps)));
    return best;
}

}  // namespace qcorr::oracle
