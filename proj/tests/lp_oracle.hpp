// Copyright (c) 2026 The nspkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracle for the simplex solver: exhaustive enumeration of basic
// solutions, independent of the tableau code path.

#pragma once

#include <cmath>
#include <optional>

#include "nspkit/combinatorics.hpp"
#include "nspkit/linalg.hpp"
#include "nspkit/rng.hpp"
#include "nspkit/simplex.hpp"

namespace nspkit::testing {

struct VertexEnumeration {
    std::optional<double> best;  // nullopt when no feasible vertex exists
    bool unbounded = false;
};

/// Enumerate basic solutions (all column subsets of size n_eq), keep the
/// feasible ones, take the best objective. Unboundedness is certified by
/// vertices of the normalized recession cone {E t = 0, sum t = 1, t >= 0}
/// with negative cost.
inline VertexEnumeration enumerate_lp(const LinearProgram& lp, double tol = 1e-9) {
    VertexEnumeration out;
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rhs.size();

    auto consider = [&](const DenseMatrix& e, const std::vector<double>& f, bool recession) {
        for_each_subset(n, std::min(n, e.rows()), [&](const std::vector<std::size_t>& cols) {
            const DenseMatrix sub = e.columns(cols);
            if (rank(sub, 1e-12) < cols.size()) return true;
            std::vector<double> xb;
            try {
                if (sub.rows() == cols.size()) {
                    xb = solve_square(sub, f);
                } else {
                    const DenseMatrix st = sub.transposed();
                    xb = solve_square(st * sub, st * f);
                }
            } catch (...) {
                return true;
            }
            const std::vector<double> resid = sub * xb;
            for (std::size_t r = 0; r < f.size(); ++r) {
                if (std::abs(resid[r] - f[r]) > 1e-7) return true;
            }
            for (double x : xb) {
                if (x < -1e-8) return true;
            }
            double obj = 0.0;
            for (std::size_t i = 0; i < cols.size(); ++i) obj += lp.objective[cols[i]] * xb[i];
            if (recession) {
                if (obj < -tol) out.unbounded = true;
            } else if (!out.best || obj < *out.best) {
                out.best = obj;
            }
            return true;
        });
    };

    consider(lp.equalities, lp.rhs, false);

    if (out.best) {
        DenseMatrix cone(m + 1, n);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) cone(r, c) = lp.equalities(r, c);
        for (std::size_t c = 0; c < n; ++c) cone(m, c) = 1.0;
        std::vector<double> rhs(m + 1, 0.0);
        rhs[m] = 1.0;
        consider(cone, rhs, true);
    }
    return out;
}

inline LinearProgram random_lp(Rng& rng, bool force_feasible, bool nonnegative_cost) {
    const std::size_t n = 2 + rng.uniform_index(5);   // up to 6 variables
    const std::size_t m = 1 + rng.uniform_index(std::min<std::size_t>(4, n));
    LinearProgram lp;
    lp.equalities = DenseMatrix(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) lp.equalities(r, c) = rng.normal();
    lp.objective.resize(n);
    for (auto& c : lp.objective) c = nonnegative_cost ? std::abs(rng.normal()) : rng.normal();
    if (force_feasible) {
        std::vector<double> x0(n);
        for (auto& x : x0) x = std::abs(rng.normal());
        lp.rhs = lp.equalities * x0;
    } else {
        lp.rhs = rng.normal_vector(m);
    }
    return lp;
}

}  // namespace nspkit::testing
