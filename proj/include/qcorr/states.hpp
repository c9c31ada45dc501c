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

// Bipartite density matrices, the named state families, and their
// decompositions (Schmidt, operator Schmidt, two-qubit Fano/canonical form).

#include <array>
#include <string>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Validation tolerance shared by hermiticity, trace and positivity checks.
inline constexpr double kStateTol = 1e-9;

/// Relative cutoff below which Schmidt / operator-Schmidt coefficients count as zero.
inline constexpr double kRankCutoff = 1e-9;

/// Density matrix on C^dim_a (x) C^dim_b, validated on construction.
/// Composite index of |i>|j> is i * dim_b + j.
class BipartiteState {
public:
    BipartiteState(Eigen::Index dim_a, Eigen::Index dim_b, const CMatrix& rho)
        : dim_a_(dim_a), dim_b_(dim_b) {
        if (dim_a < 1 || dim_b < 1 || rho.rows() != dim_a * dim_b ||
            rho.cols() != dim_a * dim_b) {
            throw NotAState("dimensions", "matrix is " + std::to_string(rho.rows()) + "x" +
                                              std::to_string(rho.cols()) + " but dim_a*dim_b = " +
                                              std::to_string(dim_a * dim_b));
        }
        const auto herm = linalg::check_hermitian(rho, kStateTol);
        if (!herm.is_hermitian) {
            throw NotAState("hermiticity",
                            "max |rho - rho^dagger| = " + std::to_string(herm.max_asymmetry));
        }
        rho_ = linalg::symmetrize(rho);
        const cplx tr = rho_.trace();
        if (std::abs(tr - 1.0) > kStateTol) {
            throw NotAState("trace", "Tr(rho) = " + std::to_string(tr.real()) + " != 1");
        }
        const double min_eig = linalg::eigh(rho_).values(0);
        if (min_eig < -kStateTol) {
            throw NotAState("psd", "minimum eigenvalue " + std::to_string(min_eig) + " < 0");
        }
    }

    Eigen::Index dim_a() const noexcept { return dim_a_; }
    Eigen::Index dim_b() const noexcept { return dim_b_; }
    const CMatrix& rho() const noexcept { return rho_; }

    CMatrix reduced_a() const {
        return linalg::partial_trace(rho_, dim_a_, dim_b_, linalg::Subsystem::A);
    }
    CMatrix reduced_b() const {
        return linalg::partial_trace(rho_, dim_a_, dim_b_, linalg::Subsystem::B);
    }

    /// Tr(rho^2)
    double purity() const { return linalg::hs_norm_sq(rho_); }

private:
    Eigen::Index dim_a_;
    Eigen::Index dim_b_;
    CMatrix rho_;
};

namespace states {

// ---------------------------------------------------------------------------
// Pure states and Schmidt data

/// Normalized |psi><psi| from (possibly unnormalized) amplitudes.
inline BipartiteState from_pure(const CVector& amplitudes, Eigen::Index dim_a,
                                Eigen::Index dim_b) {
    if (dim_a < 1 || dim_b < 1 || amplitudes.size() != dim_a * dim_b) {
        throw DimensionError("from_pure: " + std::to_string(amplitudes.size()) +
                             " amplitudes for dims " + std::to_string(dim_a) + "x" +
                             std::to_string(dim_b));
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw ParameterError("from_pure: zero vector");
    const CVector psi = amplitudes / norm;
    return BipartiteState(dim_a, dim_b, psi * psi.adjoint());
}

struct SchmidtForm {
    std::vector<double> coefficients;  // descending, sum of squares = 1
    CMatrix basis_a;                   // columns |k>
    CMatrix basis_b;                   // columns |k'>
    Eigen::Index rank = 0;

    /// sum_k lambda_k |k>|k'>
    CVector reconstruct() const {
        CVector psi = CVector::Zero(basis_a.rows() * basis_b.rows());
        for (std::size_t k = 0; k < coefficients.size(); ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            psi += coefficients[k] *
                   linalg::kron(CVector(basis_a.col(kk)), CVector(basis_b.col(kk)));
        }
        return psi;
    }
};

/// Schmidt decomposition via SVD of the dim_a x dim_b amplitude matrix.
inline SchmidtForm schmidt(const CVector& amplitudes, Eigen::Index dim_a, Eigen::Index dim_b) {
    if (dim_a < 1 || dim_b < 1 || amplitudes.size() != dim_a * dim_b) {
        throw DimensionError("schmidt: amplitude count does not match dims");
    }
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw ParameterError("schmidt: zero vector");
    CMatrix amp(dim_a, dim_b);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
        for (Eigen::Index j = 0; j < dim_b; ++j) amp(i, j) = amplitudes(i * dim_b + j) / norm;
    }
    const auto dec = linalg::svd(amp);
    SchmidtForm out;
    const double cutoff = kRankCutoff * dec.s(0);
    for (Eigen::Index k = 0; k < dec.s.size(); ++k) {
        out.coefficients.push_back(dec.s(k));
        if (dec.s(k) > cutoff) ++out.rank;
    }
    out.basis_a = dec.u;
    out.basis_b = dec.v.conjugate();
    return out;
}

// ---------------------------------------------------------------------------
// Operator Schmidt decomposition

struct OperatorSchmidtForm {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    std::vector<double> deltas;     // descending, only those above the rank cutoff
    std::vector<CMatrix> ops_a;     // E_i, Tr(E_i^dagger E_j) = delta_ij
    std::vector<CMatrix> ops_b;     // F_i, Tr(F_i^dagger F_j) = delta_ij
    std::vector<cplx> traces_a;     // Tr E_i
    std::vector<cplx> traces_b;     // Tr F_i

    Eigen::Index rank() const { return static_cast<Eigen::Index>(deltas.size()); }

    CMatrix reconstruct() const {
        CMatrix out = CMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            out += deltas[i] * linalg::kron(ops_a[i], ops_b[i]);
        }
        return out;
    }
};

/// Realignment R[(i,j),(k,l)] = rho[(i,k),(j,l)], an m^2 x n^2 matrix.
inline CMatrix realign(const CMatrix& rho, Eigen::Index dim_a, Eigen::Index dim_b) {
    if (rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b) {
        throw DimensionError("realign: dimension mismatch");
    }
    CMatrix r(dim_a * dim_a, dim_b * dim_b);
    for (Eigen::Index i = 0; i < dim_a; ++i)
        for (Eigen::Index j = 0; j < dim_a; ++j)
            for (Eigen::Index k = 0; k < dim_b; ++k)
                for (Eigen::Index l = 0; l < dim_b; ++l)
                    r(i * dim_a + j, k * dim_b + l) = rho(i * dim_b + k, j * dim_b + l);
    return r;
}

inline OperatorSchmidtForm operator_schmidt(const BipartiteState& state) {
    const auto m = state.dim_a();
    const auto n = state.dim_b();
    const auto dec = linalg::svd(realign(state.rho(), m, n));
    OperatorSchmidtForm out;
    out.dim_a = m;
    out.dim_b = n;
    const double cutoff = kRankCutoff * dec.s(0);
    for (Eigen::Index i = 0; i < dec.s.size(); ++i) {
        if (i > 0 && dec.s(i) <= cutoff) break;
        CMatrix e(m, m);
        CMatrix f(n, n);
        for (Eigen::Index r = 0; r < m; ++r)
            for (Eigen::Index c = 0; c < m; ++c) e(r, c) = dec.u(r * m + c, i);
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index c = 0; c < n; ++c) f(r, c) = std::conj(dec.v(r * n + c, i));
        out.deltas.push_back(dec.s(i));
        out.traces_a.push_back(e.trace());
        out.traces_b.push_back(f.trace());
        out.ops_a.push_back(std::move(e));
        out.ops_b.push_back(std::move(f));
    }
    return out;
}

/// Second operator-Schmidt coefficient, zero when the realignment has rank one.
inline double second_operator_schmidt_coefficient(const BipartiteState& state) {
    const auto s = linalg::svd(realign(state.rho(), state.dim_a(), state.dim_b())).s;
    return s.size() > 1 ? s(1) : 0.0;
}

/// A state is a product exactly when its operator Schmidt rank is one.
inline bool is_product(const BipartiteState& state, double tol = kStateTol) {
    return second_operator_schmidt_coefficient(state) <= tol;
}

// ---------------------------------------------------------------------------
// Families

/// Swap operator F|i>|j> = |j>|i> on C^m (x) C^m.
inline CMatrix swap_operator(Eigen::Index m) {
    CMatrix f = CMatrix::Zero(m * m, m * m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) f(j * m + i, i * m + j) = 1.0;
    return f;
}

/// (1/sqrt(m)) sum_i |ii>
inline CVector max_entangled(Eigen::Index m) {
    CVector psi = CVector::Zero(m * m);
    for (Eigen::Index i = 0; i < m; ++i) psi(i * m + i) = 1.0 / std::sqrt(double(m));
    return psi;
}

/// Werner state with antisymmetric weight x:
/// 2(1-x)/(m(m+1)) Pi_sym + 2x/(m(m-1)) Pi_anti.
inline BipartiteState werner(Eigen::Index m, double x) {
    if (m < 2) throw ParameterError("werner: m must be >= 2");
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("werner: x must lie in [0, 1]");
    const CMatrix id = CMatrix::Identity(m * m, m * m);
    const CMatrix f = swap_operator(m);
    const double md = double(m);
    const CMatrix sym = 0.5 * (id + f);
    const CMatrix anti = 0.5 * (id - f);
    return BipartiteState(m, m,
                          (2.0 * (1.0 - x) / (md * (md + 1.0))) * sym +
                              (2.0 * x / (md * (md - 1.0))) * anti);
}

/// Isotropic state (1-y)/(m^2-1) I + (m^2 y - 1)/(m^2-1) |psi+><psi+|.
inline BipartiteState isotropic(Eigen::Index m, double y) {
    if (m < 2) throw ParameterError("isotropic: m must be >= 2");
    if (!(y >= 0.0 && y <= 1.0)) throw ParameterError("isotropic: y must lie in [0, 1]");
    const double m2 = double(m * m);
    const CVector psi = max_entangled(m);
    return BipartiteState(m, m,
                          ((1.0 - y) / (m2 - 1.0)) * CMatrix::Identity(m * m, m * m) +
                              ((m2 * y - 1.0) / (m2 - 1.0)) * (psi * psi.adjoint()));
}

/// Pauli matrix sigma_axis, axis in {1, 2, 3}; axis 0 gives the identity.
inline CMatrix pauli(int axis) {
    CMatrix s(2, 2);
    const cplx i(0.0, 1.0);
    switch (axis) {
        case 0: s << 1.0, 0.0, 0.0, 1.0; break;
        case 1: s << 0.0, 1.0, 1.0, 0.0; break;
        case 2: s << 0.0, -i, i, 0.0; break;
        case 3: s << 1.0, 0.0, 0.0, -1.0; break;
        default: throw ParameterError("pauli: axis must be 0..3");
    }
    return s;
}

/// Weights of the Bell-diagonal state on Phi+, Psi+, Phi-, Psi- (in that order).
inline std::array<double, 4> bell_weights(const std::array<double, 3>& c) {
    return {(1.0 + c[0] - c[1] + c[2]) / 4.0, (1.0 - c[0] + c[1] + c[2]) / 4.0,
            (1.0 + c[0] + c[1] - c[2]) / 4.0, (1.0 - c[0] - c[1] - c[2]) / 4.0};
}

/// (1/4)(I (x) I + sum_i c_i sigma_i (x) sigma_i)
inline BipartiteState bell_diagonal(const std::array<double, 3>& c) {
    const auto w = bell_weights(c);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] < -kStateTol) {
            throw NotAState("psd", "Bell-basis weight " + std::to_string(k) + " = " +
                                       std::to_string(w[k]) + " is negative");
        }
    }
    CMatrix rho = CMatrix::Identity(4, 4);
    for (int i = 0; i < 3; ++i) rho += c[i] * linalg::kron(pauli(i + 1), pauli(i + 1));
    return BipartiteState(2, 2, rho / 4.0);
}

enum class Family { werner, isotropic, bell_diagonal };

struct FamilyParams {
    Family family = Family::werner;
    Eigen::Index m = 2;
    double param = 0.0;              // x (Werner) or y (isotropic)
    std::array<double, 3> c{};       // Bell-diagonal only
};

inline BipartiteState make_family(const FamilyParams& p) {
    switch (p.family) {
        case Family::werner: return werner(p.m, p.param);
        case Family::isotropic: return isotropic(p.m, p.param);
        case Family::bell_diagonal:
            if (p.m != 2) throw ParameterError("bell_diagonal: only m = 2 is defined");
            return bell_diagonal(p.c);
    }
    throw ParameterError("make_family: unknown family");
}

inline BipartiteState apply_local_unitary(const BipartiteState& state, const CMatrix& u_a,
                                          const CMatrix& u_b) {
    if (u_a.rows() != state.dim_a() || u_b.rows() != state.dim_b()) {
        throw DimensionError("apply_local_unitary: unitary size does not match subsystem");
    }
    const CMatrix u = linalg::kron(u_a, u_b);
    return BipartiteState(state.dim_a(), state.dim_b(), u * state.rho() * u.adjoint());
}

// ---------------------------------------------------------------------------
// Two qubits

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct TwoQubitFano {
    Vec3 u = Vec3::Zero();
    Vec3 v = Vec3::Zero();
    Mat3 w = Mat3::Zero();

    CMatrix reconstruct() const {
        CMatrix rho = CMatrix::Identity(4, 4);
        const CMatrix id = pauli(0);
        for (int i = 0; i < 3; ++i) {
            rho += u(i) * linalg::kron(pauli(i + 1), id);
            rho += v(i) * linalg::kron(id, pauli(i + 1));
            for (int j = 0; j < 3; ++j) rho += w(i, j) * linalg::kron(pauli(i + 1), pauli(j + 1));
        }
        return rho / 4.0;
    }
};

inline void require_two_qubits(const BipartiteState& state, const char* who) {
    if (state.dim_a() != 2 || state.dim_b() != 2) {
        throw DimensionError(std::string(who) + ": expects a two-qubit state");
    }
}

inline TwoQubitFano fano(const BipartiteState& state) {
    require_two_qubits(state, "fano");
    const CMatrix& rho = state.rho();
    const CMatrix id = pauli(0);
    auto expect = [&](const CMatrix& op) { return (rho * op).trace().real(); };
    TwoQubitFano f;
    for (int i = 0; i < 3; ++i) {
        f.u(i) = expect(linalg::kron(pauli(i + 1), id));
        f.v(i) = expect(linalg::kron(id, pauli(i + 1)));
        for (int j = 0; j < 3; ++j) f.w(i, j) = expect(linalg::kron(pauli(i + 1), pauli(j + 1)));
    }
    return f;
}

/// SU(2) element U with U sigma_j U^dagger = sum_i r(i, j) sigma_i for r in SO(3).
inline CMatrix su2_from_rotation(const Mat3& r) {
    double w, x, y, z;
    const double tr = r.trace();
    if (tr > 0.0) {
        const double s = std::sqrt(tr + 1.0) * 2.0;
        w = 0.25 * s;
        x = (r(2, 1) - r(1, 2)) / s;
        y = (r(0, 2) - r(2, 0)) / s;
        z = (r(1, 0) - r(0, 1)) / s;
    } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
        const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
        w = (r(2, 1) - r(1, 2)) / s;
        x = 0.25 * s;
        y = (r(0, 1) + r(1, 0)) / s;
        z = (r(0, 2) + r(2, 0)) / s;
    } else if (r(1, 1) > r(2, 2)) {
        const double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
        w = (r(0, 2) - r(2, 0)) / s;
        x = (r(0, 1) + r(1, 0)) / s;
        y = 0.25 * s;
        z = (r(1, 2) + r(2, 1)) / s;
    } else {
        const double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
        w = (r(1, 0) - r(0, 1)) / s;
        x = (r(0, 2) + r(2, 0)) / s;
        y = (r(1, 2) + r(2, 1)) / s;
        z = 0.25 * s;
    }
    const cplx i(0.0, 1.0);
    return w * pauli(0) - i * (x * pauli(1) + y * pauli(2) + z * pauli(3));
}

struct TwoQubitCanonical {
    Vec3 a = Vec3::Zero();
    Vec3 b = Vec3::Zero();
    Vec3 c = Vec3::Zero();  // |c1| >= |c2| >= |c3|
    CMatrix u_a = CMatrix::Identity(2, 2);
    CMatrix u_b = CMatrix::Identity(2, 2);

    TwoQubitFano as_fano() const {
        TwoQubitFano f;
        f.u = a;
        f.v = b;
        f.w = c.asDiagonal();
        return f;
    }
};

/// Local-unitary reduction to a diagonal correlation matrix. The real SVD of w
/// is forced into SO(3) x SO(3) by moving any reflection onto the axis of the
/// smallest singular value, then lifted to SU(2).
inline TwoQubitCanonical canonicalize_two_qubit(const BipartiteState& state) {
    require_two_qubits(state, "canonicalize_two_qubit");
    const TwoQubitFano f = fano(state);
    Eigen::JacobiSVD<Mat3> dec(f.w, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 p = dec.matrixU();
    Mat3 q = dec.matrixV();
    Vec3 s = dec.singularValues();
    if (p.determinant() < 0.0) {
        p.col(2) *= -1.0;
        s(2) *= -1.0;
    }
    if (q.determinant() < 0.0) {
        q.col(2) *= -1.0;
        s(2) *= -1.0;
    }
    TwoQubitCanonical out;
    const Mat3 rot_a = p.transpose();
    const Mat3 rot_b = q.transpose();
    out.a = rot_a * f.u;
    out.b = rot_b * f.v;
    out.c = s;
    out.u_a = su2_from_rotation(rot_a);
    out.u_b = su2_from_rotation(rot_b);
    return out;
}

}  // namespace states
}  // namespace qcorr
