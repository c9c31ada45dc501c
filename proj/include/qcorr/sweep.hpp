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

// Parameter sweeps over the Werner and isotropic families, written as CSV.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/formulas.hpp"
#include "qcorr/io.hpp"
#include "qcorr/qopt.hpp"

namespace qcorr::sweep {

/// Audit size and spread threshold for the basis-independence shortcut.
inline constexpr int kAuditBases = 16;
inline constexpr double kConstancyTol = 1e-10;

struct ConstancyQ {
    double value = 0.0;
    double stddev = 0.0;        // population stddev of the objective over the audit bases
    bool used_shortcut = true;  // false when the audit failed and the optimizer ran
};

/// Objective spread over `count` Haar-random bases drawn from `seed`.
inline double objective_stddev(const BipartiteState& state, int count, std::uint64_t seed,
                               double* mean_out = nullptr) {
    const measure::ObjectiveEvaluator f(state);
    std::mt19937_64 rng(seed);
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) vals.push_back(f(linalg::haar_unitary(state.dim_a(), rng)));
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= double(count);
    double var = 0.0;
    for (double v : vals) var += (v - mean) * (v - mean);
    if (mean_out) *mean_out = mean;
    return std::sqrt(var / double(count));
}

/// Q for states whose objective is basis independent: one evaluation in the
/// computational basis, audited over kAuditBases random bases. Falls back to
/// the full optimizer if the audit finds a spread above kConstancyTol.
inline ConstancyQ q_constancy(const BipartiteState& state, const OptimizerConfig& cfg) {
    ConstancyQ out;
    out.stddev = objective_stddev(state, kAuditBases, cfg.seed);
    if (out.stddev <= kConstancyTol) {
        out.value = measure::objective(state, VNMeasurement::computational(state.dim_a()));
        return out;
    }
    out.used_shortcut = false;
    out.value = q_numeric(state, cfg).value;
    return out;
}

struct SweepRow {
    std::string family;
    long m = 0;
    double param = 0.0;
    double q_numeric = 0.0;
    double q_printed = 0.0;
    double q_corrected = 0.0;
    double discord = 0.0;
    double eof = 0.0;
    double constancy_stddev = 0.0;
};

inline const char* kCsvHeader =
    "family,m,param,q_numeric,q_printed,q_corrected,discord,eof,constancy_stddev";

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 20;  // intervals; steps + 1 points

    std::vector<double> points() const {
        if (steps < 0) throw ParameterError("grid: steps must be >= 0");
        std::vector<double> out;
        for (int i = 0; i <= steps; ++i) {
            out.push_back(steps == 0 ? start : start + (stop - start) * double(i) / double(steps));
        }
        return out;
    }
};

inline SweepRow evaluate_point(states::Family family, long m, double param,
                               const OptimizerConfig& cfg) {
    SweepRow row;
    row.m = m;
    row.param = param;
    states::FamilyParams fp;
    fp.family = family;
    fp.m = m;
    fp.param = param;
    const auto state = states::make_family(fp);
    const auto q = q_constancy(state, cfg);
    row.q_numeric = q.value;
    row.constancy_stddev = q.stddev;
    if (family == states::Family::werner) {
        row.family = "werner";
        const auto closed = formulas::q_werner(m, param);
        row.q_printed = closed.printed.value;
        row.q_corrected = closed.corrected.value;
        row.discord = formulas::discord_werner(m, param).value;
        row.eof = formulas::eof_werner(m, param).value;
    } else if (family == states::Family::isotropic) {
        row.family = "isotropic";
        row.q_printed = row.q_corrected = formulas::q_isotropic(m, param).value;
        row.discord = formulas::discord_isotropic(m, param).value;
        row.eof = formulas::eof_isotropic(m, param).value;
    } else {
        throw ParameterError("sweep: only werner and isotropic families are supported");
    }
    return row;
}

/// Rows ordered by parameter. Points are clamped into [0, 1] to absorb grid rounding.
inline std::vector<SweepRow> run(states::Family family, long m, const Grid& grid,
                                 const OptimizerConfig& cfg) {
    std::vector<SweepRow> rows;
    for (double p : grid.points()) {
        if (p < -1e-12 || p > 1.0 + 1e-12) throw ParameterError("sweep: grid leaves [0, 1]");
        rows.push_back(evaluate_point(family, m, std::clamp(p, 0.0, 1.0), cfg));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.param < b.param; });
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    using io::format_double;
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.family << ',' << r.m << ',' << format_double(r.param) << ','
           << format_double(r.q_numeric) << ',' << format_double(r.q_printed) << ','
           << format_double(r.q_corrected) << ',' << format_double(r.discord) << ','
           << format_double(r.eof) << ',' << format_double(r.constancy_stddev) << '\n';
    }
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    write_csv(os, rows);
    return os.str();
}

}  // namespace qcorr::sweep
