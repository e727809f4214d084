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

#pragma once

#include <cstddef>
#include <vector>

#include "nspkit/dense_matrix.hpp"

namespace nspkit {

inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kDefaultOptTol = 1e-9;

/// Standard-form LP: minimize c.x subject to E x = f, x >= 0. Free variables
/// are encoded by the callers as differences of two nonnegative variables.
struct LinearProgram {
    std::vector<double> objective;  // length n_vars
    DenseMatrix equalities;         // n_eq x n_vars
    std::vector<double> rhs;        // length n_eq
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;          // basic feasible point when Optimal
    double objective_value = 0.0;
    std::size_t iterations = 0;     // total pivots over both phases
};

/// Two-phase dense-tableau simplex with Bland's anti-cycling rule. Fully
/// deterministic. Optimality is certified at opt_tol (no reduced cost below
/// -opt_tol); feasibility at feas_tol. Throws NumericError if the pivot cap
/// is hit, which is distinct from the Infeasible/Unbounded outcomes.
LpSolution solve_lp(const LinearProgram& lp, double feas_tol = kDefaultFeasTol,
                    double opt_tol = kDefaultOptTol);

struct L1AffineResult {
    double min_value = 0.0;          // ||c0 + K w*||_1
    std::vector<double> minimizer;   // u* = K w*, same length as c0
};

/// min over u in span(columns of K) of ||c0 + u||_1, by the LP encoding
/// t_i >= +-(c0 + K w)_i with w split into nonnegative parts. K may have
/// zero columns (the minimum is then ||c0||_1 at u = 0).
L1AffineResult min_l1_affine(const std::vector<double>& c0, const DenseMatrix& k,
                             double feas_tol = kDefaultFeasTol, double opt_tol = kDefaultOptTol);

struct L1EqualityResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> z;     // when Optimal
    double value = 0.0;        // ||z||_1
    std::size_t iterations = 0;
};

/// min ||z||_1 subject to E z = f via the p - q split. Infeasible when f is
/// outside the column space of E at feas_tol.
L1EqualityResult min_l1_subject_to(const DenseMatrix& e, const std::vector<double>& f,
                                   double feas_tol = kDefaultFeasTol,
                                   double opt_tol = kDefaultOptTol);

/// Exact minimum of the one-parameter problem min over t of ||c0 + t u||_1.
/// Convex piecewise linear, so the breakpoints -c0_i/u_i contain a minimizer.
/// Used as a fast path and as an independent oracle for the LP route.
double min_l1_along_line(const std::vector<double>& c0, const std::vector<double>& u,
                         double* t_star = nullptr);

}  // namespace nspkit
