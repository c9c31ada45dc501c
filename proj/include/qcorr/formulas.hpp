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

// Closed-form reference values.
//
// Every value carries a provenance tag:
//   printed             the closed form as published, reproduced unmodified
//   corrected           re-derived form, checked against the numeric optimizer
//   external_reference  literature formulas for discord and entanglement of
//                       formation of the Werner and isotropic families
//
// External formulas (all logarithms base 2, h the binary entropy):
//   eof_werner       Vollbrecht & Werner, PRA 64, 062307 (2001):
//                    E = h(1/2 - sqrt(x(1-x))) for x >= 1/2, else 0,
//                    x the weight on the antisymmetric subspace.
//   eof_isotropic    Terhal & Vollbrecht, PRL 85, 2625 (2000), F = y:
//                    0 for F <= 1/m; R(F) = h(g) + (1-g) log(m-1) with
//                    g = (sqrt F + sqrt((m-1)(1-F)))^2 / m for
//                    F <= 4(m-1)/m^2; m log(m-1)/(m-2) (F-1) + log m above.
//   discord_werner,  Chitambar, PRA 86, 032110 (2012): every rank-1
//   discord_isotropic  measurement on A is optimal, so
//                    D = S(rho_a) - S(rho) + S(rho_b^(k)) with the
//                    conditional state alpha I + beta |g><g| of any outcome.

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

namespace qcorr::formulas {

enum class Provenance { printed, corrected, external_reference };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::printed: return "printed";
        case Provenance::corrected: return "corrected";
        case Provenance::external_reference: return "external-reference";
    }
    return "unknown";
}

struct FormulaValue {
    double value = 0.0;
    Provenance provenance = Provenance::printed;
    std::string formula_id;
};

struct PrintedCorrected {
    FormulaValue printed;
    FormulaValue corrected;
};

namespace detail {

inline void require_normalized(std::span<const double> lambdas, const char* who) {
    if (lambdas.empty()) throw ParameterError(std::string(who) + ": empty Schmidt spectrum");
    double total = 0.0;
    for (double l : lambdas) {
        if (l < 0.0) throw ParameterError(std::string(who) + ": negative Schmidt coefficient");
        total += l * l;
    }
    if (std::abs(total - 1.0) > kStateTol) {
        throw ParameterError(std::string(who) + ": sum of squared Schmidt coefficients is " +
                             std::to_string(total) + ", expected 1");
    }
}

inline double sum_fourth_powers(std::span<const double> lambdas) {
    double s = 0.0;
    for (double l : lambdas) s += l * l * l * l;
    return s;
}

inline void require_unit_interval(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(who) + ": parameter outside [0, 1]");
}

inline void require_dim(long m, const char* who) {
    if (m < 2) throw ParameterError(std::string(who) + ": m must be >= 2");
}

inline double xlog2x(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

/// -(sum_i mult_i * p_i log2 p_i)
inline double entropy(std::initializer_list<std::pair<double, double>> weighted) {
    double s = 0.0;
    for (const auto& [p, mult] : weighted) s -= mult * xlog2x(p);
    return s;
}

inline double binary_entropy(double p) { return -xlog2x(p) - xlog2x(1.0 - p); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Pure states

struct PurePrinted {
    FormulaValue value;  // 2(1 - sum lambda^4)
    double bound = 0.0;  // 2(r - 1)/r
};

inline PurePrinted q_pure_printed(std::span<const double> lambdas) {
    detail::require_normalized(lambdas, "q_pure_printed");
    const double largest = *std::max_element(lambdas.begin(), lambdas.end());
    const auto rank = std::count_if(lambdas.begin(), lambdas.end(),
                                    [&](double l) { return l > kRankCutoff * largest; });
    PurePrinted out;
    out.value = {2.0 * (1.0 - detail::sum_fourth_powers(lambdas)), Provenance::printed,
                 "q_pure:2(1-sum l^4)"};
    out.bound = 2.0 * double(rank - 1) / double(rank);
    return out;
}

inline FormulaValue q_pure_corrected(std::span<const double> lambdas) {
    detail::require_normalized(lambdas, "q_pure_corrected");
    return {1.0 - detail::sum_fourth_powers(lambdas), Provenance::corrected, "q_pure:1-sum l^4"};
}

/// Pure-state measurement-induced nonlocality.
inline FormulaValue min_pure(std::span<const double> lambdas) {
    detail::require_normalized(lambdas, "min_pure");
    return {1.0 - detail::sum_fourth_powers(lambdas), Provenance::printed, "min_pure:1-sum l^4"};
}

/// Entropy of the squared Schmidt spectrum; discord and EOF coincide on pure states.
inline FormulaValue eof_pure(std::span<const double> lambdas) {
    detail::require_normalized(lambdas, "eof_pure");
    double s = 0.0;
    for (double l : lambdas) s -= detail::xlog2x(l * l);
    return {s, Provenance::printed, "eof_pure:-sum l^2 log2 l^2"};
}

// ---------------------------------------------------------------------------
// Families

inline PrintedCorrected q_bell_diagonal(const std::array<double, 3>& c) {
    const auto w = states::bell_weights(c);
    for (double wk : w) {
        if (wk < -kStateTol) throw NotAState("psd", "Bell-basis weight is negative");
    }
    const double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    return {{cmax * cmax / 4.0, Provenance::printed, "q_bell_diagonal:c^2/4"},
            {cmax * cmax / 2.0, Provenance::corrected, "q_bell_diagonal:c^2/2"}};
}

inline PrintedCorrected q_werner(long m, double x) {
    detail::require_dim(m, "q_werner");
    detail::require_unit_interval(x, "q_werner");
    const double md = double(m);
    const double num = md - 2.0 * md * x - 1.0;
    const double den = md * md - 1.0;
    const double printed = num * num / (den * den);
    return {{printed, Provenance::printed, "q_werner:(m-2mx-1)^2/(m^2-1)^2"},
            {printed * (md - 1.0) / md, Provenance::corrected,
             "q_werner:(m-1)/m*(m-2mx-1)^2/(m^2-1)^2"}};
}

inline FormulaValue q_isotropic(long m, double y) {
    detail::require_dim(m, "q_isotropic");
    detail::require_unit_interval(y, "q_isotropic");
    const double md = double(m);
    const double num = md * md * y - 1.0;
    return {num * num / (md * (md + 1.0) * (md + 1.0) * (md - 1.0)), Provenance::printed,
            "q_isotropic:(m^2y-1)^2/(m(m+1)^2(m-1))"};
}

inline FormulaValue eof_werner(long m, double x) {
    detail::require_dim(m, "eof_werner");
    detail::require_unit_interval(x, "eof_werner");
    const double e = x <= 0.5 ? 0.0 : detail::binary_entropy(0.5 - std::sqrt(x * (1.0 - x)));
    return {e, Provenance::external_reference, "eof_werner:vollbrecht_werner_2001"};
}

inline FormulaValue eof_isotropic(long m, double y) {
    detail::require_dim(m, "eof_isotropic");
    detail::require_unit_interval(y, "eof_isotropic");
    const double md = double(m);
    double e = 0.0;
    if (y > 1.0 / md) {
        if (m == 2 || y <= 4.0 * (md - 1.0) / (md * md)) {
            const double root = std::sqrt(y) + std::sqrt((md - 1.0) * (1.0 - y));
            const double g = std::min(1.0, root * root / md);
            e = detail::binary_entropy(g) + (1.0 - g) * std::log2(md - 1.0);
        } else {
            e = md * std::log2(md - 1.0) / (md - 2.0) * (y - 1.0) + std::log2(md);
        }
    }
    return {e, Provenance::external_reference, "eof_isotropic:terhal_vollbrecht_2000"};
}

namespace detail {

/// log2 m - S(rho) + S(alpha I_m + beta |g><g|)
inline double symmetric_discord(double md, double s_joint, double alpha, double beta) {
    if (std::abs(beta) <= 1e-14) return 0.0;
    const double s_cond = entropy({{alpha + beta, 1.0}, {alpha, md - 1.0}});
    return std::max(0.0, std::log2(md) - s_joint + s_cond);
}

}  // namespace detail

inline FormulaValue discord_werner(long m, double x) {
    detail::require_dim(m, "discord_werner");
    detail::require_unit_interval(x, "discord_werner");
    const double md = double(m);
    const double sym = 2.0 * (1.0 - x) / (md * (md + 1.0));
    const double anti = 2.0 * x / (md * (md - 1.0));
    const double s_joint = detail::entropy(
        {{sym, md * (md + 1.0) / 2.0}, {anti, md * (md - 1.0) / 2.0}});
    const double alpha = (md + 2.0 * x - 1.0) / (md * md - 1.0);
    const double beta = (md - 2.0 * md * x - 1.0) / (md * md - 1.0);
    return {detail::symmetric_discord(md, s_joint, alpha, beta), Provenance::external_reference,
            "discord_werner:chitambar_2012"};
}

inline FormulaValue discord_isotropic(long m, double y) {
    detail::require_dim(m, "discord_isotropic");
    detail::require_unit_interval(y, "discord_isotropic");
    const double md = double(m);
    const double m2 = md * md;
    const double s_joint = detail::entropy({{y, 1.0}, {(1.0 - y) / (m2 - 1.0), m2 - 1.0}});
    const double alpha = md * (1.0 - y) / (m2 - 1.0);
    const double beta = (m2 * y - 1.0) / (m2 - 1.0);
    return {detail::symmetric_discord(md, s_joint, alpha, beta), Provenance::external_reference,
            "discord_isotropic:chitambar_2012"};
}

}  // namespace qcorr::formulas
