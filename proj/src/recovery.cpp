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

#include "nspkit/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nspkit/combinatorics.hpp"
#include "nspkit/errors.hpp"
#include "nspkit/linalg.hpp"
#include "nspkit/rng.hpp"

namespace nspkit {

namespace {

void validate_problem(const RecoveryProblem& p) {
    if (p.a.cols() != p.d.rows()) throw std::invalid_argument("recovery: A and D are incompatible");
    if (p.y.size() != p.a.rows()) throw std::invalid_argument("recovery: y length mismatch");
    if (p.eps < 0.0 || !std::isfinite(p.eps)) throw std::invalid_argument("recovery: eps must be >= 0");
}

/// max/min of (D z)_i over the face {AD z = y, ||z||_1 = value}, all i.
double spread_impl(const DenseMatrix& m, const DenseMatrix& d, const std::vector<double>& y,
                   double value, double feas_tol, double opt_tol) {
    const std::size_t n = m.cols();
    const std::size_t rows = m.rows();

    LinearProgram lp;
    lp.objective.assign(2 * n, 0.0);
    lp.equalities = DenseMatrix(rows + 1, 2 * n);
    lp.rhs.resize(rows + 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            lp.equalities(r, c) = m(r, c);
            lp.equalities(r, n + c) = -m(r, c);
        }
        lp.rhs[r] = y[r];
    }
    for (std::size_t c = 0; c < 2 * n; ++c) lp.equalities(rows, c) = 1.0;
    lp.rhs[rows] = value;

    double spread = 0.0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        double extreme[2];
        for (int sense = 0; sense < 2; ++sense) {
            const double s = sense == 0 ? 1.0 : -1.0;  // maximize then minimize
            for (std::size_t c = 0; c < n; ++c) {
                lp.objective[c] = -s * d(i, c);
                lp.objective[n + c] = s * d(i, c);
            }
            const LpSolution sol = solve_lp(lp, feas_tol, opt_tol);
            if (sol.status != LpStatus::Optimal) {
                throw NumericError("synthesis_spread: face LP did not reach Optimal");
            }
            extreme[sense] = -s * sol.objective_value;
        }
        spread = std::max(spread, extreme[0] - extreme[1]);
    }
    return spread;
}

}  // namespace

RecoveryResult l1_synthesis_exact(const RecoveryProblem& p, double feas_tol, double opt_tol) {
    validate_problem(p);
    if (p.eps != 0.0) throw std::invalid_argument("l1_synthesis_exact: eps must be 0");

    const DenseMatrix m = p.a * p.d;
    const L1EqualityResult l1 = min_l1_subject_to(m, p.y, feas_tol, opt_tol);
    if (l1.status == LpStatus::Infeasible) {
        throw InfeasibleProblem("l1_synthesis_exact: y is not in range(AD) at tolerance");
    }
    RecoveryResult res;
    res.status = RecoveryStatus::Optimal;
    res.z_hat = l1.z;
    res.x_hat = p.d * l1.z;
    res.objective = l1.value;
    res.iterations = l1.iterations;
    res.synthesis_spread = spread_impl(m, p.d, p.y, l1.value, feas_tol, opt_tol);
    return res;
}

double synthesis_spread(const RecoveryProblem& p, const RecoveryResult& result, double feas_tol,
                        double opt_tol) {
    validate_problem(p);
    if (p.eps != 0.0 || result.status != RecoveryStatus::Optimal) {
        throw std::invalid_argument("synthesis_spread: needs an Optimal noiseless result");
    }
    return spread_impl(p.a * p.d, p.d, p.y, result.objective, feas_tol, opt_tol);
}

// ---------------------------------------------------------------------------
// Denoiser

namespace {

/// Projector onto {z : ||M z - y||_2 <= eps}, exact through the SVD of M.
/// The radial subproblem is a scalar secular equation in the multiplier,
/// solved by doubling plus fixed-count bisection (deterministic).
class BallProjector {
public:
    BallProjector(const DenseMatrix& m, const std::vector<double>& y, double eps)
        : m_(m), eps_(eps) {
        const SvdResult svd = svd_decompose(m);
        const double cut = (svd.values.empty() ? 0.0 : svd.values.front()) * kDefaultRankTol;
        for (std::size_t i = 0; i < svd.values.size(); ++i) {
            if (svd.values[i] > cut) {
                sigma_.push_back(svd.values[i]);
                v_.push_back(svd.right_vectors.col(i));
                std::vector<double> u = m * v_.back();
                for (auto& x : u) x /= svd.values[i];
                y_hat_.push_back(dot(u, y));
            }
        }
        std::vector<double> y_range(y.size(), 0.0);
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            std::vector<double> u = m_ * v_[i];
            for (std::size_t r = 0; r < u.size(); ++r) y_range[r] += y_hat_[i] * u[r] / sigma_[i];
        }
        y_perp_sq_ = 0.0;
        for (std::size_t r = 0; r < y.size(); ++r) {
            const double diff = y[r] - y_range[r];
            y_perp_sq_ += diff * diff;
        }
        y_ = y;
    }

    /// Distance from y to range(M); the ball is nonempty iff this is <= eps.
    double range_distance() const { return std::sqrt(y_perp_sq_); }

    std::vector<double> project(const std::vector<double>& a) const {
        {
            const std::vector<double> r = sub(m_ * a, y_);
            if (norm2(r) <= eps_) return a;
        }
        const std::size_t rank = sigma_.size();
        std::vector<double> a_hat(rank);
        for (std::size_t i = 0; i < rank; ++i) a_hat[i] = dot(v_[i], a);

        const double target_sq = eps_ * eps_ - y_perp_sq_;
        std::vector<double> c(rank);
        if (target_sq <= 0.0) {
            // boundary case: project onto the affine set M z = y_range
            for (std::size_t i = 0; i < rank; ++i) c[i] = y_hat_[i] / sigma_[i];
        } else {
            auto residual_sq = [&](double mu) {
                double g = 0.0;
                for (std::size_t i = 0; i < rank; ++i) {
                    const double ci = (a_hat[i] + mu * sigma_[i] * y_hat_[i]) / (1.0 + mu * sigma_[i] * sigma_[i]);
                    const double diff = sigma_[i] * ci - y_hat_[i];
                    g += diff * diff;
                }
                return g;
            };
            double hi = 1.0;
            while (residual_sq(hi) > target_sq) {
                hi *= 2.0;
                if (hi > 1e300) break;
            }
            double lo = 0.0;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (residual_sq(mid) > target_sq) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            const double mu = hi;
            for (std::size_t i = 0; i < rank; ++i) {
                c[i] = (a_hat[i] + mu * sigma_[i] * y_hat_[i]) / (1.0 + mu * sigma_[i] * sigma_[i]);
            }
        }
        // keep the null-space component of a, replace the row-space one
        std::vector<double> z = a;
        for (std::size_t i = 0; i < rank; ++i) {
            const double delta = c[i] - a_hat[i];
            for (std::size_t j = 0; j < z.size(); ++j) z[j] += delta * v_[i][j];
        }
        return z;
    }

private:
    DenseMatrix m_;
    std::vector<double> y_;
    double eps_;
    std::vector<double> sigma_;
    std::vector<std::vector<double>> v_;  // right singular vectors, length n
    std::vector<double> y_hat_;           // U^T y components
    double y_perp_sq_ = 0.0;
};

std::vector<double> soft_threshold(const std::vector<double>& x, double kappa) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = x[i] > kappa ? x[i] - kappa : (x[i] < -kappa ? x[i] + kappa : 0.0);
    }
    return r;
}

}  // namespace

RecoveryResult l1_synthesis_denoise(const RecoveryProblem& p, const DenoiseOptions& opts) {
    validate_problem(p);
    if (p.eps <= 0.0) throw std::invalid_argument("l1_synthesis_denoise: eps must be > 0");
    if (opts.rho <= 0.0) throw std::invalid_argument("l1_synthesis_denoise: rho must be > 0");

    const DenseMatrix m = p.a * p.d;
    const std::size_t n = m.cols();
    const BallProjector proj(m, p.y, p.eps);

    RecoveryResult res;
    if (proj.range_distance() > p.eps + opts.feas_tol) {
        res.status = RecoveryStatus::Infeasible;
        return res;
    }

    std::vector<double> z(n, 0.0), w(n, 0.0), h(n, 0.0);
    double primal = 0.0, dual = 0.0;
    std::size_t iter = 0;
    bool converged = false;
    for (; iter < opts.iter_cap; ++iter) {
        z = proj.project(sub(w, h));
        const std::vector<double> w_prev = w;
        w = soft_threshold(add(z, h), 1.0 / opts.rho);
        h = add(h, sub(z, w));
        primal = norm2(sub(z, w));
        dual = opts.rho * norm2(sub(w, w_prev));
        if (primal <= opts.primal_tol && dual <= opts.dual_tol) {
            converged = true;
            ++iter;
            break;
        }
    }

    res.status = converged ? RecoveryStatus::Optimal : RecoveryStatus::NonConverged;
    res.z_hat = z;  // the projected iterate, feasible by construction
    res.x_hat = p.d * z;
    res.objective = norm1(z);
    res.iterations = iter;
    res.primal_residual = primal;
    res.dual_residual = dual;
    return res;
}

// ---------------------------------------------------------------------------

double best_k_term_residual(const std::vector<double>& z, std::size_t k) {
    if (k >= z.size()) return 0.0;
    std::vector<std::size_t> order(z.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(z[i]) > std::abs(z[j]);
    });
    double tail = 0.0;
    for (std::size_t i = k; i < order.size(); ++i) tail += std::abs(z[order[i]]);
    return tail;
}

bool recovery_success(const RecoveryResult& result, const std::vector<double>& x0, double tol) {
    if (result.status != RecoveryStatus::Optimal) return false;
    if (result.x_hat.size() != x0.size()) return false;
    if (norm2(sub(result.x_hat, x0)) > tol) return false;
    return result.synthesis_spread.has_value() && *result.synthesis_spread <= tol;
}

OracleVerdict brute_force_recovery_oracle(const DenseMatrix& a, const DenseMatrix& d,
                                          std::size_t k, const OracleOptions& opts) {
    if (a.cols() != d.rows()) throw std::invalid_argument("oracle: A and D are incompatible");
    const std::size_t n = d.cols();
    if (k > n) throw std::invalid_argument("oracle: k exceeds the coefficient dimension");

    OracleVerdict verdict;
    const DenseMatrix m = a * d;

    auto run_trial = [&](const SupportSet& support, const std::vector<double>& z0) -> bool {
        ++verdict.trials;
        const std::vector<double> x0 = d * z0;
        RecoveryProblem prob{a, d, m * z0, 0.0};
        const RecoveryResult res = l1_synthesis_exact(prob);
        if (recovery_success(res, x0, opts.success_tol)) return true;
        OracleFailure fail;
        fail.support = support;
        fail.z0 = z0;
        fail.signal_error = norm2(sub(res.x_hat, x0));
        fail.spread = res.synthesis_spread.value_or(0.0);
        verdict.failure = std::move(fail);
        verdict.success = false;
        return false;
    };

    for (const auto& [support, z0] : opts.extra_signals) {
        if (!run_trial(support, z0)) return verdict;
    }
    if (k == 0) return verdict;

    Rng rng(opts.seed);
    bool aborted = false;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
        const SupportSet support(t_raw, n);
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<double> z0(n, 0.0);
            for (std::size_t i = 0; i < k; ++i) z0[t_raw[i]] = (mask >> i) & 1 ? 1.0 : -1.0;
            if (!run_trial(support, z0)) {
                aborted = true;
                return false;
            }
        }
        for (std::size_t draw = 0; draw < opts.coefficient_draws; ++draw) {
            std::vector<double> z0(n, 0.0);
            for (std::size_t i = 0; i < k; ++i) z0[t_raw[i]] = rng.normal();
            if (!run_trial(support, z0)) {
                aborted = true;
                return false;
            }
        }
        return true;
    });
    (void)aborted;
    return verdict;
}

}  // namespace nspkit
