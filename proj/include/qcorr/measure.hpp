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

// Rank-1 projective measurements on subsystem A and the averaged squared
// Hilbert-Schmidt distance between the B marginal and its conditionals.

#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

/// Outcomes with probability at or below this are treated as never occurring.
inline constexpr double kZeroProbability = 1e-12;

/// Complete orthonormal rank-1 measurement: column k of `basis` is |e_k>.
class VNMeasurement {
public:
    explicit VNMeasurement(CMatrix basis) : basis_(std::move(basis)) {
        if (basis_.rows() != basis_.cols() || basis_.rows() < 1) {
            throw DimensionError("VNMeasurement: basis must be a nonempty square matrix");
        }
        const double defect = linalg::unitarity_defect(basis_);
        if (defect > kStateTol) {
            throw ParameterError("VNMeasurement: basis is not unitary (defect " +
                                 std::to_string(defect) + ")");
        }
    }

    static VNMeasurement computational(Eigen::Index m) {
        return VNMeasurement(CMatrix::Identity(m, m));
    }

    Eigen::Index dim() const noexcept { return basis_.rows(); }
    const CMatrix& basis() const noexcept { return basis_; }
    CMatrix projector(Eigen::Index k) const { return basis_.col(k) * basis_.col(k).adjoint(); }

private:
    CMatrix basis_;
};

struct MeasurementOutcome {
    double probability = 0.0;
    CMatrix conditional_b;    // zero matrix when degenerate
    bool degenerate = false;  // probability <= kZeroProbability
};

namespace measure {

namespace detail {

/// (<e| (x) I) rho (|e> (x) I) = p * rho_b^(e)
inline CMatrix unnormalized_conditional(const CMatrix& rho, Eigen::Index dim_a,
                                        Eigen::Index dim_b, const CVector& e) {
    CMatrix out = CMatrix::Zero(dim_b, dim_b);
    for (Eigen::Index i = 0; i < dim_a; ++i) {
        const cplx ci = std::conj(e(i));
        if (ci == 0.0) continue;
        for (Eigen::Index j = 0; j < dim_a; ++j) {
            const cplx w = ci * e(j);
            if (w == 0.0) continue;
            out += w * rho.block(i * dim_b, j * dim_b, dim_b, dim_b);
        }
    }
    return out;
}

inline void require_match(const BipartiteState& state, Eigen::Index basis_dim) {
    if (basis_dim != state.dim_a()) {
        throw DimensionError("measurement dimension " + std::to_string(basis_dim) +
                             " does not match dim_a " + std::to_string(state.dim_a()));
    }
}

}  // namespace detail

inline std::vector<MeasurementOutcome> apply(const BipartiteState& state, const VNMeasurement& pi) {
    detail::require_match(state, pi.dim());
    std::vector<MeasurementOutcome> out;
    out.reserve(static_cast<std::size_t>(pi.dim()));
    for (Eigen::Index k = 0; k < pi.dim(); ++k) {
        const CMatrix block = detail::unnormalized_conditional(state.rho(), state.dim_a(),
                                                               state.dim_b(), pi.basis().col(k));
        const double p = block.trace().real();
        MeasurementOutcome o;
        o.probability = p;
        if (p <= kZeroProbability) {
            o.degenerate = true;
            o.conditional_b = CMatrix::Zero(state.dim_b(), state.dim_b());
        } else {
            o.conditional_b = linalg::symmetrize(block) / p;
        }
        out.push_back(std::move(o));
    }
    return out;
}

/// Repeated evaluation of sum_k p_k ||rho_b - rho_b^(k)||_2^2 against one
/// state. The basis is taken as given (no unitarity check) so the optimizer
/// can call it on its own chart points.
class ObjectiveEvaluator {
public:
    explicit ObjectiveEvaluator(const BipartiteState& state)
        : state_(&state), rho_b_(state.reduced_b()) {}

    double operator()(const CMatrix& basis) const {
        const auto m = state_->dim_a();
        const auto n = state_->dim_b();
        double total = 0.0;
        for (Eigen::Index k = 0; k < basis.cols(); ++k) {
            const CMatrix block =
                detail::unnormalized_conditional(state_->rho(), m, n, basis.col(k));
            const double p = block.trace().real();
            if (p <= kZeroProbability) continue;
            // p ||rho_b - block/p||^2 = ||p rho_b - block||^2 / p
            total += linalg::hs_norm_sq(p * rho_b_ - block) / p;
        }
        return total;
    }

    const BipartiteState& state() const noexcept { return *state_; }

private:
    const BipartiteState* state_;
    CMatrix rho_b_;
};

inline double objective(const BipartiteState& state, const VNMeasurement& pi) {
    detail::require_match(state, pi.dim());
    return ObjectiveEvaluator(state)(pi.basis());
}

/// The same objective through operator Schmidt data:
/// sum_i delta_i^2 (sum_k |alpha_ki|^2 / p_k - |beta_i|^2) with
/// alpha_ki = <e_k|E_i|e_k> and p_k = sum_i delta_i alpha_ki Tr(F_i).
inline double objective_os(const states::OperatorSchmidtForm& osf, const VNMeasurement& pi) {
    if (pi.dim() != osf.dim_a) {
        throw DimensionError("objective_os: measurement dimension does not match dim_a");
    }
    const auto terms = osf.deltas.size();
    const auto m = pi.dim();
    std::vector<std::vector<cplx>> alpha(static_cast<std::size_t>(m), std::vector<cplx>(terms));
    std::vector<double> prob(static_cast<std::size_t>(m), 0.0);
    for (Eigen::Index k = 0; k < m; ++k) {
        const CVector e = pi.basis().col(k);
        cplx p = 0.0;
        for (std::size_t i = 0; i < terms; ++i) {
            const cplx a = e.dot(osf.ops_a[i] * e);  // dot conjugates e
            alpha[k][i] = a;
            p += osf.deltas[i] * a * osf.traces_b[i];
        }
        prob[k] = p.real();
    }
    double total = 0.0;
    for (std::size_t i = 0; i < terms; ++i) {
        double inner = 0.0;
        for (Eigen::Index k = 0; k < m; ++k) {
            if (prob[k] <= kZeroProbability) continue;
            inner += std::norm(alpha[k][i]) / prob[k];
        }
        total += osf.deltas[i] * osf.deltas[i] * (inner - std::norm(osf.traces_a[i]));
    }
    return total;
}

}  // namespace measure
}  // namespace qcorr
