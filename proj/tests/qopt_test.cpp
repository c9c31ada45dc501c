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

#include "qcorr/qopt.hpp"

#include <gtest/gtest.h>

#include "oracles/brute.hpp"
#include "qcorr/formulas.hpp"
#include "qcorr/random.hpp"

using namespace qcorr;

namespace {

BipartiteState bell_state() {
    CVector v = CVector::Zero(4);
    v(0) = v(3) = 1.0;
    return states::from_pure(v, 2, 2);
}

states::TwoQubitCanonical canonical(Eigen::Vector3d a, Eigen::Vector3d b, Eigen::Vector3d c) {
    states::TwoQubitCanonical out;
    out.a = a;
    out.b = b;
    out.c = c;
    return out;
}

}  // namespace

TEST(qopt, hermitian_chart) {
    Eigen::VectorXd theta(9);
    theta << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    const CMatrix h = qopt::hermitian_from_params(theta, 3);
    EXPECT_TRUE(linalg::check_hermitian(h, 0.0).is_hermitian);
    EXPECT_EQ(h(0, 0), cplx(1, 0));
    EXPECT_EQ(h(0, 1), cplx(4, 5));
    EXPECT_EQ(h(1, 2), cplx(8, 9));
    EXPECT_THROW(qopt::hermitian_from_params(theta, 2), DimensionError);
}

TEST(qopt, config_validation) {
    OptimizerConfig cfg;
    cfg.restarts = 0;
    EXPECT_THROW(q_numeric(bell_state(), cfg), ParameterError);
    cfg = OptimizerConfig{};
    cfg.convergence_tol = 0.0;
    EXPECT_THROW(q_numeric(bell_state(), cfg), ParameterError);
    EXPECT_EQ(OptimizerConfig::defaults_for(3).restarts, 32u);
    EXPECT_EQ(OptimizerConfig::defaults_for(4).restarts, 64u);
}

TEST(qopt, q_numeric_examples) {
    EXPECT_NEAR(q_numeric(BipartiteState(2, 2, CMatrix::Identity(4, 4) / 4.0)).value, 0.0, 1e-10);
    EXPECT_NEAR(q_numeric(bell_state()).value, 0.5, 1e-8);
    EXPECT_NEAR(q_numeric(states::isotropic(2, 1.0)).value, 0.5, 1e-8);
    EXPECT_NEAR(q_numeric(states::isotropic(3, 1.0)).value, 2.0 / 3.0, 1e-8);
}

TEST(qopt, q_numeric_result_invariants) {
    sampling::Rng rng(41);
    const auto st = sampling::random_state(2, 2, rng);
    const auto r = q_numeric(st);
    EXPECT_EQ(r.per_restart_values.size(), 32u);
    EXPECT_EQ(r.value, *std::max_element(r.per_restart_values.begin(), r.per_restart_values.end()));
    EXPECT_GE(r.value, measure::objective(st, r.argmax) - 1e-12);
    EXPECT_NEAR(r.value, measure::objective(st, r.argmax), 1e-12);
    EXPECT_TRUE(r.converged);
    EXPECT_GT(r.evaluations, 0u);
}

TEST(qopt, q_numeric_matches_bloch_grid_oracle) {
    sampling::Rng rng(42);
    for (int t = 0; t < 4; ++t) {
        const auto st = t < 2 ? sampling::random_state(2, 2, rng) : sampling::random_state(2, 3, rng);
        const double grid = oracle::q_qubit_grid(st.rho(), st.dim_b(), 90);
        const double q = q_numeric(st).value;
        EXPECT_GE(q, grid - 1e-12);
        EXPECT_LE(q - grid, 2e-3);
    }
}

TEST(qopt, q_numeric_bell_diagonal_closed_form) {
    sampling::Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        const auto c = sampling::random_bell_c(rng);
        EXPECT_NEAR(q_numeric(states::bell_diagonal(c)).value,
                    formulas::q_bell_diagonal(c).corrected.value, 1e-8);
    }
}

TEST(qopt, supremum_dominates_any_basis) {
    sampling::Rng rng(44);
    const auto st = sampling::random_state(3, 3, rng);
    const double q = q_numeric(st).value;
    for (int t = 0; t < 100; ++t) {
        EXPECT_LE(measure::objective(st, VNMeasurement(linalg::haar_unitary(3, rng))), q + 1e-9);
    }
}

TEST(qopt, monotone_in_restarts_and_reproducible) {
    sampling::Rng rng(45);
    const auto st = sampling::random_state(3, 2, rng);
    OptimizerConfig cfg;
    cfg.seed = 7;
    double prev = -1.0;
    std::vector<double> prefix;
    for (std::size_t r : {1u, 2u, 4u, 8u}) {
        cfg.restarts = r;
        const auto res = q_numeric(st, cfg);
        EXPECT_GE(res.value, prev);
        prev = res.value;
        // shared seed-stream prefix
        for (std::size_t i = 0; i < prefix.size(); ++i) EXPECT_EQ(res.per_restart_values[i], prefix[i]);
        prefix = res.per_restart_values;
    }
    const auto a = q_numeric(st, cfg);
    const auto b = q_numeric(st, cfg);
    EXPECT_EQ(a.per_restart_values, b.per_restart_values);
}

TEST(qopt, local_unitary_invariance) {
    sampling::Rng rng(46);
    for (int t = 0; t < 10; ++t) {
        const auto st = sampling::random_state(2, 2, rng);
        const auto moved = states::apply_local_unitary(st, linalg::haar_unitary(2, rng),
                                                       linalg::haar_unitary(2, rng));
        EXPECT_NEAR(q_numeric(st).value, q_numeric(moved).value, 1e-6);
    }
}

TEST(qopt, constancy_families_agree_across_restarts) {
    sampling::Rng rng(47);
    const std::vector<BipartiteState> family = {states::werner(3, 0.8), states::isotropic(3, 0.6),
                                                sampling::random_pure_state(3, 3, rng)};
    for (const auto& st : family) {
        const auto r = q_numeric(st);
        const auto [lo, hi] = std::minmax_element(r.per_restart_values.begin(), r.per_restart_values.end());
        EXPECT_LE(*hi - *lo, 1e-9);
    }
}

TEST(qopt, non_convergence_is_reported_not_thrown) {
    sampling::Rng rng(48);
    const auto st = sampling::random_state(3, 3, rng);
    OptimizerConfig cfg;
    cfg.restarts = 2;
    cfg.max_iterations = 3;
    const auto r = q_numeric(st, cfg);
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.value, 0.0);
}

TEST(qopt, gamma_direct_bell_diagonal) {
    // oracle.py: Pauli-basis objectives for c = (0.6, -0.3, 0.2) are (0.18, 0.045, 0.02)
    const auto g = gamma_direct(states::bell_diagonal({0.6, -0.3, 0.2}));
    EXPECT_NEAR(g.gamma_1, 0.18, 1e-14);
    EXPECT_NEAR(g.gamma_2, 0.045, 1e-14);
    EXPECT_NEAR(g.gamma_3, 0.02, 1e-14);
    EXPECT_NEAR(g.gamma, 0.18, 1e-14);
    EXPECT_EQ(g.variant, GammaVariant::direct);
}

TEST(qopt, gamma_direct_product_is_zero) {
    sampling::Rng rng(49);
    const auto g = gamma_direct(sampling::random_product_state(2, 2, rng));
    EXPECT_NEAR(g.gamma_1, 0.0, 1e-14);
    EXPECT_NEAR(g.gamma_2, 0.0, 1e-14);
    EXPECT_NEAR(g.gamma_3, 0.0, 1e-14);
    EXPECT_THROW(gamma_direct(states::werner(3, 0.1)), DimensionError);
}

TEST(qopt, gamma_direct_is_a_lower_bound) {
    sampling::Rng rng(50);
    for (int t = 0; t < 30; ++t) {
        const auto st = sampling::random_state(2, 2, rng);
        EXPECT_LE(gamma_direct(st).gamma, q_numeric(st).value + 1e-9);
    }
}

TEST(qopt, gamma_printed_examples) {
    const auto g = gamma_printed(canonical({0, 0, 0}, {0, 0, 0}, {0.7, 0, 0}));
    EXPECT_NEAR(g.gamma_1, 0.49, 1e-15);
    EXPECT_EQ(g.gamma_2, 0.0);
    EXPECT_EQ(g.gamma_3, 0.0);
    EXPECT_EQ(g.variant, GammaVariant::printed);
    const auto z = gamma_printed(canonical({0, 0, 0}, {0, 0, 0}, {0, 0, 0}));
    EXPECT_EQ(z.gamma, 0.0);
    EXPECT_FALSE(z.degenerate);
}

TEST(qopt, gamma_printed_is_twice_direct_on_bell_diagonal) {
    sampling::Rng rng(51);
    for (int t = 0; t < 50; ++t) {
        const auto c = sampling::random_bell_c(rng);
        const auto printed = gamma_printed(canonical({0, 0, 0}, {0, 0, 0}, {c[0], c[1], c[2]}));
        const auto direct = gamma_direct(states::bell_diagonal(c));
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(printed.components()[i], 2.0 * direct.components()[i], 1e-14);
        }
    }
}

TEST(qopt, gamma_printed_verbatim_prefactors) {
    // gamma_3's second half carries (1 - a_2)/2 as displayed
    const Eigen::Vector3d a(0.1, 0.2, 0.3), b(0.05, -0.1, 0.2), c(0.4, -0.2, 0.1);
    const auto g = gamma_printed(canonical(a, b, c));
    auto half = [&](int j, double sign, double pre) {
        const double d = 1.0 + sign * a(j);
        const double k = 1.0 - 1.0 / d;
        double s = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double term = i == j ? k * b(i) - sign * c(j) / d : k * b(i);
            s += term * term;
        }
        return pre * s;
    };
    EXPECT_NEAR(g.gamma_1, half(0, 1, (1 + a(0)) / 2) + half(0, -1, (1 - a(0)) / 2), 1e-15);
    EXPECT_NEAR(g.gamma_2, half(1, 1, (1 + a(1)) / 2) + half(1, -1, (1 - a(1)) / 2), 1e-15);
    EXPECT_NEAR(g.gamma_3, half(2, 1, (1 + a(2)) / 2) + half(2, -1, (1 - a(1)) / 2), 1e-15);
}

TEST(qopt, gamma_printed_flags_divergence) {
    const auto g = gamma_printed(canonical({1.0, 0, 0}, {0, 0, 0.2}, {0.1, 0, 0}));
    EXPECT_TRUE(g.degenerate);
    EXPECT_TRUE(std::isinf(g.gamma_1));
    EXPECT_TRUE(std::isinf(g.gamma));
}
