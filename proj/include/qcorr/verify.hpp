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

// Randomized invariant checks behind `qcorr verify`. The transcript is a pure
// function of the options, so repeated seeded runs are byte-identical.

#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "qcorr/qopt.hpp"
#include "qcorr/random.hpp"
#include "qcorr/sweep.hpp"

namespace qcorr::verify {

struct Options {
    std::uint64_t seed = 0;
    int count = 20;            // random instances per check
    std::size_t restarts = 0;  // 0: per-dimension default
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct Summary {
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
    std::string transcript() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        }
        return os.str();
    }
};

namespace detail {

inline std::string sci(double x) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << x;
    return os.str();
}

}  // namespace detail

inline Summary run(const Options& opt) {
    auto cfg_for = [&](Eigen::Index m, std::uint64_t salt) {
        auto cfg = OptimizerConfig::defaults_for(m, opt.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
        if (opt.restarts > 0) cfg.restarts = opt.restarts;
        return cfg;
    };
    Summary s;
    sampling::Rng rng(opt.seed);

    auto check = [&](std::string name, const std::function<std::string(bool&)>& body) {
        CheckResult r;
        r.name = std::move(name);
        r.detail = body(r.passed);
        s.checks.push_back(std::move(r));
    };

    check("state_validation", [&](bool& ok) {
        CMatrix bad = CMatrix::Identity(4, 4) / 2.0;  // trace 2
        try {
            BipartiteState(2, 2, bad);
            ok = false;
            return std::string("trace-2 matrix accepted");
        } catch (const NotAState& e) {
            ok = e.invariant() == "trace";
            return "trace-2 matrix rejected, invariant=" + e.invariant();
        }
    });

    check("nullity_product_states", [&](bool& ok) {
        double worst = 0.0;
        for (int i = 0; i < opt.count; ++i) {
            const Eigen::Index m = 2 + i % 2;
            const auto st = sampling::random_product_state(m, m, rng);
            worst = std::max(worst, q_numeric(st, cfg_for(m, std::uint64_t(i))).value);
        }
        ok = worst <= 1e-8;
        return "max Q over " + std::to_string(opt.count) + " product states = " + detail::sci(worst);
    });

    check("nullity_converse", [&](bool& ok) {
        double least = INFINITY;
        for (int i = 0; i < opt.count; ++i) {
            const Eigen::Index m = 2 + i % 2;
            const auto st = sampling::random_state(m, m, rng);
            if (states::is_product(st)) continue;
            least = std::min(least, q_numeric(st, cfg_for(m, std::uint64_t(i))).value);
        }
        ok = least > 1e-5;
        return "min Q over non-product states = " + detail::sci(least);
    });

    check("objective_equivalence", [&](bool& ok) {
        double worst = 0.0;
        for (int i = 0; i < opt.count; ++i) {
            const Eigen::Index m = 2 + i % 2;
            const auto st = sampling::random_state(m, m, rng);
            const VNMeasurement pi(linalg::haar_unitary(m, rng));
            worst = std::max(worst, std::abs(measure::objective(st, pi) -
                                             measure::objective_os(states::operator_schmidt(st), pi)));
        }
        ok = worst <= 1e-9;
        return "max |direct - operator Schmidt| = " + detail::sci(worst);
    });

    check("local_unitary_invariance", [&](bool& ok) {
        double worst = 0.0;
        for (int i = 0; i < opt.count; ++i) {
            const auto st = sampling::random_state(2, 2, rng);
            const auto moved = states::apply_local_unitary(st, linalg::haar_unitary(2, rng),
                                                           linalg::haar_unitary(2, rng));
            const auto cfg = cfg_for(2, std::uint64_t(i));
            worst = std::max(worst, std::abs(q_numeric(st, cfg).value - q_numeric(moved, cfg).value));
        }
        ok = worst <= 1e-6;
        return "max |Q(U rho U^dagger) - Q(rho)| = " + detail::sci(worst);
    });

    check("gamma_soundness", [&](bool& ok) {
        double worst = -INFINITY;
        for (int i = 0; i < opt.count; ++i) {
            const auto st = sampling::random_state(2, 2, rng);
            worst = std::max(worst, gamma_direct(st).gamma - q_numeric(st, cfg_for(2, std::uint64_t(i))).value);
        }
        ok = worst <= 1e-9;
        return "max (gamma_direct - Q) = " + detail::sci(worst);
    });

    check("constancy_families", [&](bool& ok) {
        double worst = 0.0;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < opt.count; ++i) {
            const long m = 2 + i % 3;
            const std::uint64_t salt = opt.seed + std::uint64_t(i);
            worst = std::max(worst, sweep::objective_stddev(states::werner(m, unit(rng)), 64, salt));
            worst = std::max(worst, sweep::objective_stddev(states::isotropic(m, unit(rng)), 64, salt));
            worst = std::max(worst, sweep::objective_stddev(sampling::random_pure_state(m, m, rng), 64, salt));
        }
        ok = worst <= 1e-10;
        return "max objective stddev over 64 bases = " + detail::sci(worst);
    });

    return s;
}

}  // namespace qcorr::verify
