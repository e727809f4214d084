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

#include <cstdint>
#include <optional>
#include <vector>

#include "nspkit/dense_matrix.hpp"
#include "nspkit/properties.hpp"
#include "nspkit/simplex.hpp"

namespace nspkit {

/// Instance of the synthesis recovery problem: observe y = A x0 (+ noise),
/// reconstruct coefficients z with x = D z. eps = 0 selects the
/// equality-constrained program, eps > 0 the l2-ball constrained one.
struct RecoveryProblem {
    DenseMatrix a;          // m x d
    DenseMatrix d;          // d x n
    std::vector<double> y;  // length m
    double eps = 0.0;
};

enum class RecoveryStatus { Optimal, Infeasible, NonConverged };

struct RecoveryResult {
    RecoveryStatus status = RecoveryStatus::Infeasible;
    std::vector<double> z_hat;
    std::vector<double> x_hat;  // D z_hat
    double objective = 0.0;     // ||z_hat||_1
    std::size_t iterations = 0;
    double primal_residual = 0.0;  // splitting diagnostics; zero on the LP path
    double dual_residual = 0.0;
    /// Largest coordinate range of D z over the optimal face; zero iff every
    /// minimizer synthesizes to the same signal. Only the noiseless LP path
    /// computes it.
    std::optional<double> synthesis_spread;
};

/// Noiseless synthesis recovery: min ||z||_1 s.t. AD z = y, then x = D z.
/// Also measures the synthesis spread of the optimal face. Throws
/// InfeasibleProblem when y is outside range(AD) at tolerance.
RecoveryResult l1_synthesis_exact(const RecoveryProblem& p, double feas_tol = kDefaultFeasTol,
                                  double opt_tol = kDefaultOptTol);

struct DenoiseOptions {
    std::size_t iter_cap = 50000;
    double rho = 1.0;
    double primal_tol = 1e-8;
    double dual_tol = 1e-8;
    double feas_tol = 1e-9;
};

/// Noisy synthesis recovery, min ||z||_1 s.t. ||y - AD z||_2 <= eps, by
/// alternating-direction splitting: exact projection onto the constraint
/// ball through an SVD of AD, soft thresholding for the l1 term. Returns
/// NonConverged (with residuals) when the iteration cap runs out; the
/// iterate it returns is always feasible.
RecoveryResult l1_synthesis_denoise(const RecoveryProblem& p, const DenoiseOptions& opts = {});

/// l1 mass of everything but the k largest-magnitude entries. Ties go to the
/// lower index, which cannot change the value.
double best_k_term_residual(const std::vector<double>& z, std::size_t k);

/// Recovery succeeded iff the solve is Optimal, the synthesized signal
/// matches x0 within tol, and the synthesis spread is within tol (every
/// minimizer must synthesize identically). Results without a computed spread
/// count as not verified.
bool recovery_success(const RecoveryResult& result, const std::vector<double>& x0, double tol);

/// Coordinate range of D z over the optimal face {ADz = y, ||z||_1 = value},
/// by a pair of LPs per signal coordinate.
double synthesis_spread(const RecoveryProblem& p, const RecoveryResult& result,
                        double feas_tol = kDefaultFeasTol, double opt_tol = kDefaultOptTol);

struct OracleOptions {
    std::size_t coefficient_draws = 3;
    double success_tol = 1e-6;
    std::uint64_t seed = 1;
    /// Extra coefficient vectors to try first (e.g. signals built from a
    /// D-NSP falsification witness).
    std::vector<std::pair<SupportSet, std::vector<double>>> extra_signals;
};

struct OracleFailure {
    SupportSet support;
    std::vector<double> z0;
    double signal_error = 0.0;
    double spread = 0.0;
};

struct OracleVerdict {
    bool success = true;  // every trial recovered
    std::optional<OracleFailure> failure;
    std::size_t trials = 0;
};

/// Experimental ground truth for "l1-synthesis succeeds on every k-sparse
/// signal": for each support of size k, tries every +-1 sign vertex plus
/// coefficient_draws random coefficient vectors (plus any extra signals),
/// solving the noiseless program and applying recovery_success. k = 0 is
/// vacuously true.
OracleVerdict brute_force_recovery_oracle(const DenseMatrix& a, const DenseMatrix& d,
                                          std::size_t k, const OracleOptions& opts = {});

}  // namespace nspkit
