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

#include "qcorr/linalg.hpp"

#include <gtest/gtest.h>

#include "oracles/brute.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;
using linalg::max_abs_diff;

namespace {

CMatrix random_matrix(Eigen::Index r, Eigen::Index c, sampling::Rng& rng) {
    return sampling::ginibre(r, c, rng);
}

CMatrix random_hermitian(Eigen::Index d, sampling::Rng& rng) {
    const CMatrix g = random_matrix(d, d, rng);
    return g + g.adjoint();
}

}  // namespace

TEST(linalg, kron_identity_and_pauli) {
    EXPECT_LE(max_abs_diff(linalg::kron(CMatrix(CMatrix::Identity(2, 2)), CMatrix(CMatrix::Identity(2, 2))),
                           CMatrix::Identity(4, 4)),
              0.0);
    CMatrix expected = CMatrix::Zero(4, 4);
    expected.diagonal() << 1.0, -1.0, -1.0, 1.0;
    EXPECT_EQ(max_abs_diff(linalg::kron(states::pauli(3), states::pauli(3)), expected), 0.0);
}

TEST(linalg, kron_shape_law_and_brute_agreement) {
    sampling::Rng rng(1);
    const CMatrix a = random_matrix(2, 3, rng);
    const CMatrix b = random_matrix(3, 2, rng);
    const CMatrix k = linalg::kron(a, b);
    EXPECT_EQ(k.rows(), 6);
    EXPECT_EQ(k.cols(), 6);
    EXPECT_LE(max_abs_diff(k, oracle::kron(a, b)), 1e-15);
}

TEST(linalg, kron_associative_on_mixed_shapes) {
    sampling::Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        const CMatrix a = random_matrix(1 + t % 3, 2, rng);
        const CMatrix b = random_matrix(2, 1 + t % 2, rng);
        const CMatrix c = random_matrix(3, 2, rng);
        EXPECT_LE(max_abs_diff(linalg::kron(linalg::kron(a, b), c),
                               linalg::kron(a, linalg::kron(b, c))),
                  1e-12);
    }
}

TEST(linalg, partial_trace_of_product) {
    sampling::Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const Eigen::Index m = 1 + t % 4, n = 1 + (t / 4) % 3;
        const CMatrix a = random_matrix(m, m, rng);
        const CMatrix b = random_matrix(n, n, rng);
        const CMatrix ab = linalg::kron(a, b);
        EXPECT_LE(max_abs_diff(linalg::partial_trace(ab, m, n, linalg::Subsystem::B),
                               a.trace() * b),
                  1e-12);
        EXPECT_LE(max_abs_diff(linalg::partial_trace(ab, m, n, linalg::Subsystem::A),
                               b.trace() * a),
                  1e-12);
    }
}

TEST(linalg, partial_trace_bell_marginal) {
    const CVector phi = states::max_entangled(2);
    const CMatrix rho = phi * phi.adjoint();
    EXPECT_LE(max_abs_diff(linalg::partial_trace(rho, 2, 2, linalg::Subsystem::B),
                           CMatrix::Identity(2, 2) / 2.0),
              1e-15);
}

TEST(linalg, partial_trace_preserves_trace) {
    sampling::Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        const CMatrix rho = sampling::random_density(6, rng);
        EXPECT_NEAR(linalg::partial_trace(rho, 2, 3, linalg::Subsystem::A).trace().real(), 1.0,
                    1e-12);
    }
}

TEST(linalg, partial_trace_dimension_mismatch) {
    EXPECT_THROW(linalg::partial_trace(CMatrix::Identity(5, 5), 2, 2, linalg::Subsystem::A),
                 DimensionError);
}

TEST(linalg, hs_norm_sq_examples) {
    EXPECT_DOUBLE_EQ(linalg::hs_norm_sq(states::pauli(1)), 2.0);
    EXPECT_DOUBLE_EQ(linalg::hs_norm_sq(CMatrix::Zero(3, 3)), 0.0);
    sampling::Rng rng(5);
    for (Eigen::Index m = 2; m <= 5; ++m) {
        const CVector v = sampling::random_pure_vector(m, rng);
        const CMatrix diff = CMatrix::Identity(m, m) / double(m) - v * v.adjoint();
        EXPECT_NEAR(linalg::hs_norm_sq(diff), double(m - 1) / double(m), 1e-14);
    }
}

TEST(linalg, hs_norm_polarization_identity) {
    sampling::Rng rng(6);
    for (int t = 0; t < 100; ++t) {
        const CMatrix a = random_matrix(3, 4, rng);
        const CMatrix b = random_matrix(3, 4, rng);
        const double lhs = linalg::hs_norm_sq(a - b);
        const double rhs = linalg::hs_norm_sq(a) + linalg::hs_norm_sq(b) -
                           2.0 * linalg::hs_inner(a, b).real();
        EXPECT_NEAR(lhs, rhs, 1e-10);
    }
}

TEST(linalg, eigh_examples) {
    const auto z = linalg::eigh(states::pauli(3));
    EXPECT_NEAR(z.values(0), -1.0, 1e-15);
    EXPECT_NEAR(z.values(1), 1.0, 1e-15);
    const auto id = linalg::eigh(CMatrix::Identity(4, 4));
    for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(id.values(i), 1.0, 1e-15);
}

TEST(linalg, eigh_rejects_non_hermitian) {
    CMatrix a = CMatrix::Zero(2, 2);
    a(0, 1) = 1.0;
    EXPECT_THROW(linalg::eigh(a), NotHermitian);
    EXPECT_FALSE(linalg::check_hermitian(a).is_hermitian);
    EXPECT_DOUBLE_EQ(linalg::check_hermitian(a).max_asymmetry, 1.0);
}

TEST(linalg, eigh_symmetrizes_near_hermitian_input) {
    CMatrix a = states::pauli(1);
    a(0, 1) += cplx(5e-10, 0.0);
    const auto e = linalg::eigh(a);
    EXPECT_NEAR(e.values(1), 1.0, 1e-9);
}

TEST(linalg, eigh_and_svd_reconstruct_random_inputs) {
    sampling::Rng rng(7);
    for (int t = 0; t < 1000; ++t) {
        const Eigen::Index d = 1 + t % 16;
        const CMatrix h = random_hermitian(d, rng);
        const auto e = linalg::eigh(h);
        ASSERT_LE(max_abs_diff(e.vectors * e.values.asDiagonal() * e.vectors.adjoint(), h), 1e-10);
        ASSERT_LE(linalg::unitarity_defect(e.vectors), 1e-10);
        for (Eigen::Index i = 1; i < d; ++i) ASSERT_LE(e.values(i - 1), e.values(i));

        const CMatrix a = random_matrix(d, 1 + (t / 3) % 16, rng);
        const auto s = linalg::svd(a);
        ASSERT_LE(max_abs_diff(s.u * s.s.asDiagonal() * s.v.adjoint(), a), 1e-10);
        for (Eigen::Index i = 1; i < s.s.size(); ++i) ASSERT_LE(s.s(i), s.s(i - 1));
        ASSERT_GE(s.s.minCoeff(), 0.0);
        ASSERT_LE(max_abs_diff(s.u.adjoint() * s.u, CMatrix::Identity(s.u.cols(), s.u.cols())),
                  1e-10);
        ASSERT_LE(max_abs_diff(s.v.adjoint() * s.v, CMatrix::Identity(s.v.cols(), s.v.cols())),
                  1e-10);
    }
}

TEST(linalg, svd_examples) {
    const auto id = linalg::svd(CMatrix::Identity(3, 3));
    for (Eigen::Index i = 0; i < 3; ++i) EXPECT_NEAR(id.s(i), 1.0, 1e-15);
    sampling::Rng rng(8);
    const CVector x = sampling::ginibre(4, 1, rng).col(0);
    const CVector y = sampling::ginibre(3, 1, rng).col(0);
    const auto r1 = linalg::svd(x * y.adjoint());
    EXPECT_NEAR(r1.s(0), x.norm() * y.norm(), 1e-12);
    EXPECT_LE(r1.s(1), 1e-12);
}

TEST(linalg, haar_unitary_contract) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CMatrix u = linalg::haar_unitary(1 + seed % 6, seed);
        EXPECT_LE(linalg::unitarity_defect(u), 1e-12);
    }
    const CMatrix scalar = linalg::haar_unitary(1, 99);
    EXPECT_NEAR(std::abs(scalar(0, 0)), 1.0, 1e-15);
    EXPECT_EQ(max_abs_diff(linalg::haar_unitary(4, 123), linalg::haar_unitary(4, 123)), 0.0);
    EXPECT_GT(max_abs_diff(linalg::haar_unitary(4, 123), linalg::haar_unitary(4, 124)), 0.0);
    EXPECT_THROW(linalg::haar_unitary(0, 1), ParameterError);
}

TEST(linalg, haar_unitary_first_moment_vanishes) {
    // E[U_ij] = 0 and E[|U_ij|^2] = 1/m for Haar measure
    const Eigen::Index m = 3;
    const int samples = 4000;
    CMatrix mean = CMatrix::Zero(m, m);
    Eigen::MatrixXd second = Eigen::MatrixXd::Zero(m, m);
    for (int s = 0; s < samples; ++s) {
        const CMatrix u = linalg::haar_unitary(m, std::uint64_t(1000 + s));
        mean += u;
        second += u.cwiseAbs2();
    }
    mean /= double(samples);
    second /= double(samples);
    EXPECT_LE(mean.cwiseAbs().maxCoeff(), 0.05);
    EXPECT_LE((second.array() - 1.0 / double(m)).abs().maxCoeff(), 0.03);
}

TEST(linalg, expi_hermitian_is_unitary) {
    sampling::Rng rng(9);
    for (int t = 0; t < 20; ++t) {
        const CMatrix h = random_hermitian(4, rng);
        EXPECT_LE(linalg::unitarity_defect(linalg::expi_hermitian(h)), 1e-12);
    }
    EXPECT_LE(max_abs_diff(linalg::expi_hermitian(CMatrix::Zero(3, 3)), CMatrix::Identity(3, 3)),
              1e-15);
}
