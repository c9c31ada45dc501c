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

// Derivative-free simplex maximization (Nelder-Mead with the standard
// reflection/expansion/contraction/shrink coefficients 1, 2, 1/2, 1/2).

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace qcorr::optim {

struct SimplexOptions {
    double initial_step = 0.25;
    std::size_t max_iterations = 2000;
    double value_tol = 1e-12;  // stop when max - min over the simplex is below this
};

struct SimplexResult {
    Eigen::VectorXd argmax;
    double value = 0.0;
    std::size_t evaluations = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

template <typename Fn>
SimplexResult nelder_mead_maximize(Fn&& f, const Eigen::VectorXd& start,
                                   const SimplexOptions& opts) {
    const auto dim = start.size();
    const auto npts = static_cast<std::size_t>(dim + 1);
    std::vector<Eigen::VectorXd> pts(npts, start);
    std::vector<double> vals(npts);
    std::size_t evals = 0;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++evals;
        return f(x);
    };
    for (Eigen::Index d = 0; d < dim; ++d) pts[static_cast<std::size_t>(d + 1)](d) += opts.initial_step;
    for (std::size_t i = 0; i < npts; ++i) vals[i] = eval(pts[i]);

    std::vector<std::size_t> order(npts);
    bool converged = false;
    std::size_t iterations = 0;
    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // descending by value: order[0] best, order.back() worst
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[npts - 2];
        if (vals[best] - vals[worst] <= opts.value_tol) {
            converged = true;
            break;
        }
        if (iterations >= opts.max_iterations) break;
        ++iterations;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
        for (std::size_t i = 0; i + 1 < npts; ++i) centroid += pts[order[i]];
        centroid /= double(dim);

        const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
        const double f_r = eval(reflected);
        if (f_r > vals[best]) {
            const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
            const double f_e = eval(expanded);
            if (f_e > f_r) {
                pts[worst] = expanded;
                vals[worst] = f_e;
            } else {
                pts[worst] = reflected;
                vals[worst] = f_r;
            }
            continue;
        }
        if (f_r > vals[second_worst]) {
            pts[worst] = reflected;
            vals[worst] = f_r;
            continue;
        }
        const bool outside = f_r > vals[worst];
        const Eigen::VectorXd contracted =
            outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                    : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
        const double f_c = eval(contracted);
        if (f_c > (outside ? f_r : vals[worst])) {
            pts[worst] = contracted;
            vals[worst] = f_c;
            continue;
        }
        for (std::size_t i = 1; i < npts; ++i) {
            const std::size_t idx = order[i];
            pts[idx] = pts[best] + 0.5 * (pts[idx] - pts[best]);
            vals[idx] = eval(pts[idx]);
        }
    }
    const auto best_it = std::max_element(vals.begin(), vals.end());
    const auto bi = static_cast<std::size_t>(best_it - vals.begin());
    return {pts[bi], vals[bi], evals, iterations, converged};
}

}  // namespace qcorr::optim
