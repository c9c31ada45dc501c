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

// Dense complex kernels for small bipartite systems. Everything here is a pure
// function of its arguments; randomness only enters through explicit seeds or
// caller-owned engines.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace linalg {

/// Max-abs asymmetry accepted before a matrix is treated as non-Hermitian.
inline constexpr double kHermitianTol = 1e-9;

struct HermitianCheck {
    bool is_hermitian = false;
    double max_asymmetry = 0.0;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

inline HermitianCheck check_hermitian(const CMatrix& a, double tol = kHermitianTol) {
    if (a.rows() != a.cols()) return {false, INFINITY};
    const double asym = a.size() == 0 ? 0.0 : (a - a.adjoint()).cwiseAbs().maxCoeff();
    return {asym <= tol, asym};
}

/// (A + A^dagger) / 2
inline CMatrix symmetrize(const CMatrix& a) {
    return (a + a.adjoint()) * 0.5;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

enum class Subsystem { A, B };

/// Reduced matrix on the `keep` factor of an operator on C^dim_a (x) C^dim_b.
/// Index convention: the composite index of |i>|j> is i * dim_b + j.
inline CMatrix partial_trace(const CMatrix& rho, Eigen::Index dim_a, Eigen::Index dim_b,
                             Subsystem keep) {
    if (dim_a < 1 || dim_b < 1 || rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
        throw DimensionError("partial_trace: matrix is " + std::to_string(rho.rows()) + "x" +
                             std::to_string(rho.cols()) + ", expected " +
                             std::to_string(dim_a * dim_b) + " square");
    }
    if (keep == Subsystem::B) {
        CMatrix out = CMatrix::Zero(dim_b, dim_b);
        for (Eigen::Index i = 0; i < dim_a; ++i) {
            out += rho.block(i * dim_b, i * dim_b, dim_b, dim_b);
        }
        return out;
    }
    CMatrix out(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
        for (Eigen::Index j = 0; j < dim_a; ++j) {
            out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
        }
    }
    return out;
}

/// Squared Hilbert-Schmidt norm Tr(A^dagger A).
inline double hs_norm_sq(const CMatrix& a) {
    return a.squaredNorm();
}

/// Hilbert-Schmidt inner product Tr(A^dagger B).
inline cplx hs_inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_inner: shape mismatch");
    }
    return (a.adjoint() * b).trace();
}

struct EighResult {
    RVector values;   // ascending
    CMatrix vectors;  // columns are eigenvectors
};

/// Hermitian eigendecomposition. Inputs within kHermitianTol of Hermitian are
/// symmetrized first; anything further off throws NotHermitian.
inline EighResult eigh(const CMatrix& h, double tol = kHermitianTol) {
    const auto check = check_hermitian(h, tol);
    if (!check.is_hermitian) {
        throw NotHermitian("eigh: max |A - A^dagger| = " + std::to_string(check.max_asymmetry));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrize(h));
    if (solver.info() != Eigen::Success) {
        throw Error("eigh: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

struct SvdResult {
    CMatrix u;  // orthonormal columns
    RVector s;  // descending, nonnegative
    CMatrix v;  // orthonormal columns, a = u * diag(s) * v^dagger
};

inline SvdResult svd(const CMatrix& a) {
    Eigen::JacobiSVD<CMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

/// Haar-random m x m unitary drawn from `rng`: QR of a complex Ginibre matrix
/// with the columns of Q rephased so that diag(R) is real positive.
template <typename Engine>
CMatrix haar_unitary(Eigen::Index m, Engine& rng) {
    if (m < 1) throw ParameterError("haar_unitary: m must be >= 1");
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix z(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(i, j) = cplx(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(m, m);
    const CMatrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < m; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

inline CMatrix haar_unitary(Eigen::Index m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return haar_unitary(m, rng);
}

/// ||U^dagger U - I||_max
inline double unitarity_defect(const CMatrix& u) {
    if (u.rows() != u.cols()) return INFINITY;
    return max_abs_diff(u.adjoint() * u, CMatrix::Identity(u.rows(), u.cols()));
}

/// exp(i H) for Hermitian H.
inline CMatrix expi_hermitian(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrize(h));
    const RVector& w = solver.eigenvalues();
    CVector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, w(i));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace linalg
}  // namespace qcorr
