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

// Numerical supremum of the averaged-distance objective over local rank-1
// measurements on A, and the two-qubit Pauli-basis lower bounds.

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "qcorr/measure.hpp"
#include "qcorr/nelder_mead.hpp"

namespace qcorr {

enum class Parameterization {
    /// basis = U0 * exp(i H(theta)), H built from m^2 real parameters
    exp_hermitian,
};

struct OptimizerConfig {
    std::size_t restarts = 32;
    std::size_t max_iterations = 2000;  // simplex iterations per restart
    double convergence_tol = 1e-9;      // on objective improvement
    std::uint64_t seed = 0;
    Parameterization parameterization = Parameterization::exp_hermitian;

    /// 32 restarts up to m = 3, 64 beyond.
    static OptimizerConfig defaults_for(Eigen::Index dim_a, std::uint64_t seed = 0) {
        OptimizerConfig cfg;
        cfg.restarts = dim_a <= 3 ? 32 : 64;
        cfg.seed = seed;
        return cfg;
    }

    void validate() const {
        if (restarts < 1) throw ParameterError("OptimizerConfig: restarts must be >= 1");
        if (max_iterations < 1) {
            throw ParameterError("OptimizerConfig: max_iterations must be >= 1");
        }
        if (!(convergence_tol > 0.0)) {
            throw ParameterError("OptimizerConfig: convergence_tol must be > 0");
        }
    }
};

struct QResult {
    double value = 0.0;
    VNMeasurement argmax = VNMeasurement::computational(1);
    std::vector<double> per_restart_values;
    bool converged = false;  // every restart met the improvement tolerance
    std::size_t evaluations = 0;
};

namespace qopt {

/// Hermitian matrix from m^2 reals: diagonal first, then (re, im) of each
/// upper off-diagonal entry in row-major order.
inline CMatrix hermitian_from_params(const Eigen::VectorXd& theta, Eigen::Index m) {
    if (theta.size() != m * m) throw DimensionError("hermitian_from_params: need m^2 parameters");
    CMatrix h = CMatrix::Zero(m, m);
    Eigen::Index idx = 0;
    for (Eigen::Index i = 0; i < m; ++i) h(i, i) = theta(idx++);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = i + 1; j < m; ++j) {
            const cplx z(theta(idx), theta(idx + 1));
            idx += 2;
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

inline CMatrix chart_point(const CMatrix& origin, const Eigen::VectorXd& theta) {
    return origin * linalg::expi_hermitian(hermitian_from_params(theta, origin.rows()));
}

/// Engine for one restart; depends only on (seed, restart index).
inline std::mt19937_64 restart_engine(std::uint64_t seed, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart),
                      static_cast<std::uint32_t>(std::uint64_t(restart) >> 32)};
    return std::mt19937_64(seq);
}

struct RestartOutcome {
    CMatrix basis;
    double value = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Local maximization from one starting unitary. Each simplex round runs in a
/// chart centred on the best basis so far; rounds repeat with a shrinking
/// initial step until a round improves the value by less than the tolerance.
inline RestartOutcome local_maximize(const measure::ObjectiveEvaluator& f, CMatrix origin,
                                     const OptimizerConfig& cfg) {
    const Eigen::Index m = origin.rows();
    RestartOutcome out;
    out.value = f(origin);
    out.evaluations = 1;
    if (m == 1) {
        out.basis = std::move(origin);
        out.converged = true;
        return out;
    }
    std::size_t iterations_left = cfg.max_iterations;
    double step = 0.25;
    while (iterations_left > 0) {
        optim::SimplexOptions opts;
        opts.initial_step = step;
        opts.max_iterations = iterations_left;
        opts.value_tol = 1e-3 * cfg.convergence_tol;
        const auto res = optim::nelder_mead_maximize(
            [&](const Eigen::VectorXd& theta) { return f(chart_point(origin, theta)); },
            Eigen::VectorXd::Zero(m * m), opts);
        out.evaluations += res.evaluations;
        iterations_left -= std::min(iterations_left, std::max<std::size_t>(res.iterations, 1));
        const double gain = res.value - out.value;
        if (gain > 0.0) {
            origin = chart_point(origin, res.argmax);
            out.value = res.value;
        }
        if (gain <= cfg.convergence_tol && res.converged) {
            out.converged = true;
            break;
        }
        step = std::max(step * 0.5, 1e-3);
    }
    // re-orthonormalize to wash out drift accumulated by repeated recentering
    Eigen::HouseholderQR<CMatrix> qr(origin);
    CMatrix q = qr.householderQ() * CMatrix::Identity(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const cplx r = qr.matrixQR()(j, j);
        if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
    }
    out.basis = std::move(q);
    out.value = std::max(out.value, f(out.basis));
    return out;
}

}  // namespace qopt

/// Multi-start estimate of the supremum over rank-1 measurements on A.
/// Always a lower bound on the true value; never throws on non-convergence.
inline QResult q_numeric(const BipartiteState& state, const OptimizerConfig& cfg) {
    cfg.validate();
    const measure::ObjectiveEvaluator f(state);
    QResult result;
    result.converged = true;
    result.value = -std::numeric_limits<double>::infinity();
    CMatrix best_basis;
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        auto rng = qopt::restart_engine(cfg.seed, r);
        const auto outcome = qopt::local_maximize(f, linalg::haar_unitary(state.dim_a(), rng), cfg);
        result.per_restart_values.push_back(outcome.value);
        result.evaluations += outcome.evaluations;
        result.converged = result.converged && outcome.converged;
        if (outcome.value > result.value) {
            result.value = outcome.value;
            best_basis = outcome.basis;
        }
    }
    result.argmax = VNMeasurement(best_basis);
    return result;
}

inline QResult q_numeric(const BipartiteState& state) {
    return q_numeric(state, OptimizerConfig::defaults_for(state.dim_a()));
}

// ---------------------------------------------------------------------------
// Two-qubit lower bounds

enum class GammaVariant { direct, printed };

struct GammaTriple {
    double gamma_1 = 0.0;
    double gamma_2 = 0.0;
    double gamma_3 = 0.0;
    double gamma = 0.0;  // max of the three
    GammaVariant variant = GammaVariant::direct;
    bool degenerate = false;  // printed variant only: some |a_j| = 1

    std::array<double, 3> components() const { return {gamma_1, gamma_2, gamma_3}; }
};

namespace qopt {

/// Eigenbasis of sigma_axis (axis 1, 2, 3) as measurement columns.
inline VNMeasurement pauli_eigenbasis(int axis) {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i(0.0, 1.0);
    CMatrix b(2, 2);
    switch (axis) {
        case 1: b << r, r, r, -r; break;
        case 2: b << r, r, i * r, -i * r; break;
        case 3: b << 1.0, 0.0, 0.0, 1.0; break;
        default: throw ParameterError("pauli_eigenbasis: axis must be 1, 2 or 3");
    }
    return VNMeasurement(b);
}

}  // namespace qopt

/// Objective evaluated at the three Pauli eigenbases on A. Component j uses
/// the sigma_j eigenbasis. A sound lower bound on q_numeric by construction.
inline GammaTriple gamma_direct(const BipartiteState& state) {
    states::require_two_qubits(state, "gamma_direct");
    GammaTriple g;
    g.variant = GammaVariant::direct;
    g.gamma_1 = measure::objective(state, qopt::pauli_eigenbasis(1));
    g.gamma_2 = measure::objective(state, qopt::pauli_eigenbasis(2));
    g.gamma_3 = measure::objective(state, qopt::pauli_eigenbasis(3));
    g.gamma = std::max({g.gamma_1, g.gamma_2, g.gamma_3});
    return g;
}

/// The three closed-form gamma expressions exactly as printed, evaluated at
/// canonical parameters (a, b, c). Kept verbatim for auditing, including the
/// (1 - a_2)/2 prefactor in the second half of gamma_3.
inline GammaTriple gamma_printed(const states::TwoQubitCanonical& canon) {
    const auto& a = canon.a;
    const auto& b = canon.b;
    const auto& c = canon.c;
    GammaTriple g;
    g.variant = GammaVariant::printed;

    auto sq = [](double x) { return x * x; };
    // One printed display: coupled component j, prefactor parameters for the
    // "+" and "-" halves.
    auto display = [&](int j, double pre_plus, double pre_minus) {
        const double dp = 1.0 + a(j);
        const double dm = 1.0 - a(j);
        if (std::abs(dp) < 1e-12 || std::abs(dm) < 1e-12) {
            g.degenerate = true;
            return std::numeric_limits<double>::infinity();
        }
        const double kp = 1.0 - 1.0 / dp;
        const double km = 1.0 - 1.0 / dm;
        double plus = 0.0;
        double minus = 0.0;
        for (int i = 0; i < 3; ++i) {
            plus += i == j ? sq(kp * b(i) - c(j) / dp) : sq(kp * b(i));
            minus += i == j ? sq(km * b(i) + c(j) / dm) : sq(km * b(i));
        }
        return (1.0 + pre_plus) / 2.0 * plus + (1.0 - pre_minus) / 2.0 * minus;
    };
    g.gamma_1 = display(0, a(0), a(0));
    g.gamma_2 = display(1, a(1), a(1));
    g.gamma_3 = display(2, a(2), a(1));
    g.gamma = std::max({g.gamma_1, g.gamma_2, g.gamma_3});
    return g;
}

}  // namespace qcorr
