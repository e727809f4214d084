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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "lp_oracle.hpp"
#include "nspkit/rng.hpp"
#include "nspkit/simplex.hpp"

using namespace nspkit;
using nspkit::testing::enumerate_lp;
using nspkit::testing::random_lp;
using nspkit::testing::VertexEnumeration;

TEST_CASE("trivial equality program") {
    LinearProgram lp{{1.0}, DenseMatrix{{1.0}}, {1.0}};
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(1.0));
    CHECK(sol.objective_value == doctest::Approx(1.0));
}

TEST_CASE("unbounded program is detected") {
    LinearProgram lp{{-1.0}, DenseMatrix{{0.0}}, {0.0}};
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("conflicting equalities are infeasible") {
    // x1 + x2 = 1 and x1 - x2 = 3 force x2 = -1 < 0
    LinearProgram lp{{1.0, 1.0}, DenseMatrix{{1.0, 1.0}, {1.0, -1.0}}, {1.0, 3.0}};
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("redundant equalities are tolerated") {
    LinearProgram lp{{1.0, 2.0}, DenseMatrix{{1.0, 1.0}, {2.0, 2.0}}, {1.0, 2.0}};
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(1.0));
}

TEST_CASE("solver agrees with vertex enumeration on 100 seeded programs") {
    Rng rng(2024);
    int done = 0;
    while (done < 100) {
        // mix feasible-by-construction, arbitrary rhs, and free-sign costs
        const bool force_feasible = done % 3 != 2;
        const bool nonneg_cost = done % 2 == 0;
        const LinearProgram lp = random_lp(rng, force_feasible, nonneg_cost);
        const LpSolution sol = solve_lp(lp);
        const VertexEnumeration oracle = enumerate_lp(lp);

        if (sol.status == LpStatus::Optimal) {
            REQUIRE_MESSAGE(oracle.best.has_value(), "oracle found no vertex but solver says Optimal");
            CHECK(!oracle.unbounded);
            CHECK(sol.objective_value == doctest::Approx(*oracle.best).epsilon(1e-8));
            const std::vector<double> resid = lp.equalities * sol.x;
            for (std::size_t r = 0; r < lp.rhs.size(); ++r) {
                CHECK(std::abs(resid[r] - lp.rhs[r]) <= 1e-7);
            }
            for (double x : sol.x) CHECK(x >= -1e-9);
        } else if (sol.status == LpStatus::Unbounded) {
            CHECK(oracle.unbounded);
        } else {
            CHECK(!oracle.best.has_value());
        }
        ++done;
    }
}

TEST_CASE("min_l1_affine with an empty subspace returns the plain norm") {
    const auto res = min_l1_affine({1.0, -2.0, 3.0}, DenseMatrix());
    CHECK(res.min_value == doctest::Approx(6.0));
    CHECK(norm2(res.minimizer) == 0.0);
}

TEST_CASE("min_l1_affine reaches zero when c0 lies in the subspace") {
    const DenseMatrix k{{1.0}, {0.0}};
    const auto res = min_l1_affine({1.0, 0.0}, k);
    CHECK(res.min_value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("min_l1_affine matches the one-dimensional breakpoint oracle") {
    // c0 = (0.9, 0, -1), direction (0.9, 0.1, -1): the scan oracle gives 0.1
    const std::vector<double> c0{0.9, 0.0, -1.0};
    const std::vector<double> u{0.9, 0.1, -1.0};
    DenseMatrix k(3, 1, u);
    const auto res = min_l1_affine(c0, k);
    const double oracle = min_l1_along_line(c0, u);
    CHECK(res.min_value == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(oracle == doctest::Approx(0.1));
}

TEST_CASE("min_l1_affine properties on random instances") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(6);
        const std::size_t p = rng.uniform_index(3);
        const std::vector<double> c0 = rng.normal_vector(n);
        DenseMatrix k(n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < p; ++j) k(i, j) = rng.normal();

        const auto res = min_l1_affine(c0, k);
        CHECK(res.min_value <= norm1(c0) + 1e-10);
        CHECK(res.min_value == doctest::Approx(norm1(add(c0, res.minimizer))).epsilon(1e-12));

        // positive homogeneity and symmetry
        const double lambda = 0.25 + 3.0 * rng.uniform();
        const auto scaled_res = min_l1_affine(scaled(c0, lambda), k);
        CHECK(scaled_res.min_value == doctest::Approx(lambda * res.min_value).epsilon(1e-9));
        const auto neg_res = min_l1_affine(scaled(c0, -1.0), k);
        CHECK(neg_res.min_value == doctest::Approx(res.min_value).epsilon(1e-9));

        // the one-dimensional case agrees with the breakpoint scan
        if (p == 1) {
            CHECK(res.min_value ==
                  doctest::Approx(min_l1_along_line(c0, k.col(0))).epsilon(1e-9));
        }
    }
}

TEST_CASE("min_l1_subject_to identity system") {
    const auto res = min_l1_subject_to(DenseMatrix::identity(2), {1.0, 0.0});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.z[0] == doctest::Approx(1.0));
    CHECK(res.z[1] == doctest::Approx(0.0));
    CHECK(res.value == doctest::Approx(1.0));
}

TEST_CASE("min_l1_subject_to tie between two vertices") {
    const auto res = min_l1_subject_to(DenseMatrix{{1.0, 1.0}}, {2.0});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == doctest::Approx(2.0));
    // either (2, 0) or (0, 2); both are vertices of the optimal face
    CHECK(res.z[0] * res.z[1] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("min_l1_subject_to prefers the cheaper column") {
    const auto res = min_l1_subject_to(DenseMatrix{{1.0, 2.0}}, {2.0});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.value == doctest::Approx(1.0));
    CHECK(res.z[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(res.z[1] == doctest::Approx(1.0));
}

TEST_CASE("min_l1_subject_to flags infeasible data") {
    const DenseMatrix e{{1.0, 1.0}, {1.0, 1.0}};
    const auto res = min_l1_subject_to(e, {1.0, 2.0});
    CHECK(res.status == LpStatus::Infeasible);
}

TEST_CASE("solver is deterministic") {
    Rng rng(99);
    const LinearProgram lp = random_lp(rng, true, false);
    const LpSolution a = solve_lp(lp);
    const LpSolution b = solve_lp(lp);
    CHECK(a.status == b.status);
    CHECK(a.iterations == b.iterations);
    if (a.status == LpStatus::Optimal) {
        for (std::size_t i = 0; i < a.x.size(); ++i) CHECK(a.x[i] == b.x[i]);
    }
}
