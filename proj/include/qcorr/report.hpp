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

// Discrepancy report: published closed forms against the numeric optimizer.
// Neither side is adjusted; each entry records both values, their ratio and a
// verdict.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/formulas.hpp"
#include "qcorr/io.hpp"
#include "qcorr/qopt.hpp"
#include "qcorr/random.hpp"

namespace qcorr::report {

enum class Verdict { consistent, discrepant, degenerate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::consistent: return "consistent";
        case Verdict::discrepant: return "discrepant";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

inline constexpr double kRelativeTol = 1e-6;
/// Values at or below this magnitude are treated as exact zeros.
inline constexpr double kZeroFloor = 1e-12;

struct ReportEntry {
    std::string claim_id;
    std::string paper_location;  // the published claim being audited
    double printed_value = 0.0;
    double oracle_value = 0.0;
    double ratio = 0.0;  // printed / oracle; 1 when both vanish
    Verdict verdict = Verdict::consistent;
};

inline ReportEntry make_entry(std::string id, std::string location, double printed, double oracle,
                              double rel_tol = kRelativeTol) {
    ReportEntry e{std::move(id), std::move(location), printed, oracle, 0.0, Verdict::consistent};
    if (!std::isfinite(printed)) {
        e.ratio = std::numeric_limits<double>::quiet_NaN();
        e.verdict = Verdict::degenerate;
        return e;
    }
    const bool p_zero = std::abs(printed) <= kZeroFloor;
    const bool o_zero = std::abs(oracle) <= kZeroFloor;
    if (p_zero && o_zero) {
        e.ratio = 1.0;
    } else if (o_zero) {
        e.ratio = std::numeric_limits<double>::infinity();
    } else {
        e.ratio = printed / oracle;
    }
    const double scale = std::max(std::abs(printed), std::abs(oracle));
    e.verdict = std::abs(printed - oracle) <= rel_tol * scale + kZeroFloor ? Verdict::consistent
                                                                           : Verdict::discrepant;
    return e;
}

namespace detail {

inline std::vector<double> schmidt_of(const CVector& psi, Eigen::Index m, Eigen::Index n) {
    return states::schmidt(psi, m, n).coefficients;
}

}  // namespace detail

/// Builds every audit entry. Oracle values come from q_numeric with the
/// default restart count for the state's dimension and the given seed.
inline std::vector<ReportEntry> build(std::uint64_t seed, std::size_t restarts = 0) {
    auto cfg_for = [&](Eigen::Index m) {
        auto cfg = OptimizerConfig::defaults_for(m, seed);
        if (restarts > 0) cfg.restarts = restarts;
        return cfg;
    };
    auto oracle = [&](const BipartiteState& s) { return q_numeric(s, cfg_for(s.dim_a())).value; };
    std::vector<ReportEntry> out;

    // Pure states: Bell pair, a fixed qutrit spectrum, a random qutrit pair, a product.
    struct PureCase {
        std::string name;
        CVector psi;
        Eigen::Index dim;
    };
    std::vector<PureCase> pure;
    {
        CVector bell = CVector::Zero(4);
        bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
        pure.push_back({"bell", bell, 2});
        CVector qutrit = CVector::Zero(9);
        qutrit(0) = std::sqrt(0.5);
        qutrit(4) = std::sqrt(0.3);
        qutrit(8) = std::sqrt(0.2);
        pure.push_back({"spectrum_0.5_0.3_0.2", qutrit, 3});
        sampling::Rng rng(seed);
        pure.push_back({"random_3x3", sampling::random_pure_vector(9, rng), 3});
        CVector prod = CVector::Zero(4);
        prod(0) = 1.0;
        pure.push_back({"product_00", prod, 2});
    }
    for (const auto& pc : pure) {
        const auto lambdas = detail::schmidt_of(pc.psi, pc.dim, pc.dim);
        const double q = oracle(states::from_pure(pc.psi, pc.dim, pc.dim));
        const double n_value = formulas::min_pure(lambdas).value;
        out.push_back(make_entry("pure." + pc.name + ".closed_form",
                                 "pure-state closed form Q = 2(1 - sum lambda^4)",
                                 formulas::q_pure_printed(lambdas).value.value, q));
        out.push_back(make_entry("pure." + pc.name + ".twice_min",
                                 "pure-state relation Q = 2N (N the pure-state MIN)",
                                 2.0 * n_value, q));
        out.push_back(make_entry("pure." + pc.name + ".min_value",
                                 "pure-state MIN value N = 1 - sum lambda^4", n_value, q));
    }

    // Bell-diagonal.
    const std::vector<std::pair<std::string, std::array<double, 3>>> bell_cases = {
        {"bell_projector", {1.0, -1.0, 1.0}},
        {"c_0.6_-0.3_0.2", {0.6, -0.3, 0.2}},
        {"c_-0.2_0.5_0.1", {-0.2, 0.5, 0.1}},
        {"maximally_mixed", {0.0, 0.0, 0.0}},
    };
    for (const auto& [name, c] : bell_cases) {
        const double q = oracle(states::bell_diagonal(c));
        out.push_back(make_entry("bell_diagonal." + name, "Bell-diagonal closed form Q = c^2/4",
                                 formulas::q_bell_diagonal(c).printed.value, q));
    }

    // Werner.
    for (long m : {2L, 3L, 4L}) {
        for (double x : {0.0, 0.6, 1.0}) {
            std::ostringstream id;
            id << "werner.m" << m << ".x" << x;
            const double q = oracle(states::werner(m, x));
            out.push_back(make_entry(id.str(), "Werner closed form Q = (m-2mx-1)^2/(m^2-1)^2",
                                     formulas::q_werner(m, x).printed.value, q));
        }
        const double x0 = double(m - 1) / double(2 * m);  // the maximally mixed point
        std::ostringstream id;
        id << "werner.m" << m << ".product";
        out.push_back(make_entry(id.str(), "Werner closed form Q = (m-2mx-1)^2/(m^2-1)^2",
                                 formulas::q_werner(m, x0).printed.value,
                                 oracle(states::werner(m, x0))));
    }

    // Isotropic.
    const std::vector<std::pair<long, double>> iso_cases = {
        {2, 0.8}, {2, 1.0}, {3, 0.5}, {3, 1.0}, {4, 0.3}, {2, 0.25}};
    for (const auto& [m, y] : iso_cases) {
        std::ostringstream id;
        id << "isotropic.m" << m << ".y" << y;
        out.push_back(make_entry(id.str(), "isotropic closed form Q = (m^2y-1)^2/(m(m+1)^2(m-1))",
                                 formulas::q_isotropic(m, y).value, oracle(states::isotropic(m, y))));
    }

    // Printed two-qubit lower bound gamma against the numeric supremum.
    const std::vector<std::pair<std::string, BipartiteState>> gamma_cases = {
        {"bell_diagonal_c_0.6_-0.3_0.2", states::bell_diagonal({0.6, -0.3, 0.2})},
        {"bell_projector", states::bell_diagonal({1.0, -1.0, 1.0})},
        {"pure_product_00", states::from_pure(pure.back().psi, 2, 2)},
    };
    for (const auto& [name, st] : gamma_cases) {
        const auto canon = states::canonicalize_two_qubit(st);
        out.push_back(make_entry("gamma_printed." + name,
                                 "two-qubit lower bound gamma = max(gamma_1, gamma_2, gamma_3)",
                                 gamma_printed(canon).gamma, oracle(st)));
    }
    return out;
}

inline std::string to_json(const std::vector<ReportEntry>& entries) {
    using io::format_double;
    auto num = [](double x) -> std::string {
        if (std::isnan(x)) return "null";
        if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
        return format_double(x);
    };
    std::ostringstream os;
    os << "{\n  \"entries\": [\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        os << "    {\"claim_id\": " << nlohmann::json(e.claim_id).dump()
           << ", \"paper_location\": " << nlohmann::json(e.paper_location).dump()
           << ", \"printed_value\": " << num(e.printed_value)
           << ", \"oracle_value\": " << num(e.oracle_value) << ", \"ratio\": " << num(e.ratio)
           << ", \"verdict\": \"" << to_string(e.verdict) << "\"}"
           << (i + 1 < entries.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
    return os.str();
}

inline void write_table(std::ostream& os, const std::vector<ReportEntry>& entries) {
    os << std::left << std::setw(44) << "claim" << std::right << std::setw(14) << "printed"
       << std::setw(14) << "oracle" << std::setw(12) << "ratio" << "  verdict\n";
    os << std::string(96, '-') << '\n';
    for (const auto& e : entries) {
        os << std::left << std::setw(44) << e.claim_id << std::right << std::setprecision(8)
           << std::setw(14) << e.printed_value << std::setw(14) << e.oracle_value
           << std::setw(12) << std::setprecision(6) << e.ratio << "  " << to_string(e.verdict)
           << '\n';
    }
}

}  // namespace qcorr::report
