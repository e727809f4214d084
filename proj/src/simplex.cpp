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

#include "nspkit/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nspkit/errors.hpp"

namespace nspkit {

namespace {

constexpr double kPivotTol = 1e-11;

// Dense tableau: row 0 holds reduced costs and (at column n_cols) the
// negated objective; rows 1..m hold B^{-1}E | B^{-1}f. basis[r] is the
// variable basic in constraint row r+1.
struct Tableau {
    std::vector<std::vector<double>> t;
    std::vector<std::size_t> basis;
    std::size_t n_cols = 0;  // structural columns (rhs lives at index n_cols)

    double& at(std::size_t r, std::size_t c) { return t[r][c]; }
    double at(std::size_t r, std::size_t c) const { return t[r][c]; }
    std::size_t n_rows() const { return t.size() - 1; }
};

void pivot(Tableau& tab, std::size_t row, std::size_t col) {
    auto& pr = tab.t[row];
    const double p = pr[col];
    for (auto& v : pr) v /= p;
    pr[col] = 1.0;
    for (std::size_t r = 0; r < tab.t.size(); ++r) {
        if (r == row) continue;
        auto& tr = tab.t[r];
        const double f = tr[col];
        if (f == 0.0) continue;
        for (std::size_t c = 0; c <= tab.n_cols; ++c) tr[c] -= f * pr[c];
        tr[col] = 0.0;
    }
    tab.basis[row - 1] = col;
}

enum class CoreStatus { Optimal, Unbounded };

// Bland's rule: entering = lowest-index column with reduced cost < -opt_tol;
// leaving = min ratio, ties broken by lowest basic variable index.
CoreStatus run_simplex(Tableau& tab, double opt_tol, std::size_t& iterations,
                       std::size_t iter_cap) {
    const std::size_t m = tab.n_rows();
    for (;;) {
        std::size_t enter = tab.n_cols;
        for (std::size_t c = 0; c < tab.n_cols; ++c) {
            if (tab.at(0, c) < -opt_tol) {
                enter = c;
                break;
            }
        }
        if (enter == tab.n_cols) return CoreStatus::Optimal;

        std::size_t leave = 0;
        double best_ratio = std::numeric_limits<double>::infinity();
        bool found = false;
        for (std::size_t r = 1; r <= m; ++r) {
            const double a = tab.at(r, enter);
            if (a <= kPivotTol) continue;
            const double ratio = std::max(tab.at(r, tab.n_cols), 0.0) / a;
            if (!found || ratio < best_ratio - 1e-12 ||
                (std::abs(ratio - best_ratio) <= 1e-12 && tab.basis[r - 1] < tab.basis[leave - 1])) {
                best_ratio = ratio;
                leave = r;
                found = true;
            }
        }
        if (!found) return CoreStatus::Unbounded;

        pivot(tab, leave, enter);
        if (++iterations > iter_cap) {
            throw NumericError("solve_lp: pivot cap exceeded (cycling guard)");
        }
    }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double feas_tol, double opt_tol) {
    const std::size_t n = lp.objective.size();
    const std::size_t m = lp.rhs.size();
    if (lp.equalities.rows() != m || (m > 0 && lp.equalities.cols() != n)) {
        throw std::invalid_argument("solve_lp: inconsistent dimensions");
    }
    for (double c : lp.objective) {
        if (!std::isfinite(c)) throw std::invalid_argument("solve_lp: non-finite objective");
    }

    const std::size_t iter_cap = 20000 + 200 * (n + m);
    std::size_t iterations = 0;

    // Phase 1 tableau with one artificial per row; rows flipped so rhs >= 0.
    Tableau tab;
    tab.n_cols = n + m;
    tab.t.assign(m + 1, std::vector<double>(tab.n_cols + 1, 0.0));
    tab.basis.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
        const double sign = lp.rhs[r] < 0.0 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < n; ++c) tab.at(r + 1, c) = sign * lp.equalities(r, c);
        tab.at(r + 1, n + r) = 1.0;
        tab.at(r + 1, tab.n_cols) = sign * lp.rhs[r];
        tab.basis[r] = n + r;
    }
    // Phase-1 reduced costs: minimize the sum of artificials, which are
    // basic, so subtract every constraint row from the cost row.
    for (std::size_t c = 0; c <= tab.n_cols; ++c) {
        double s = 0.0;
        for (std::size_t r = 1; r <= m; ++r) s += tab.at(r, c);
        tab.at(0, c) = -s;
    }
    for (std::size_t r = 0; r < m; ++r) tab.at(0, n + r) = 0.0;

    run_simplex(tab, opt_tol, iterations, iter_cap);  // bounded below by 0, never Unbounded

    const double phase1_obj = -tab.at(0, tab.n_cols);
    if (phase1_obj > feas_tol) {
        return {LpStatus::Infeasible, {}, 0.0, iterations};
    }

    // Drive leftover artificials out of the basis; rows where that fails are
    // redundant equalities and get dropped.
    std::vector<std::size_t> drop_rows;
    for (std::size_t r = 1; r <= tab.n_rows(); ++r) {
        if (tab.basis[r - 1] < n) continue;
        std::size_t col = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (std::abs(tab.at(r, c)) > kPivotTol) {
                col = c;
                break;
            }
        }
        if (col < n) {
            pivot(tab, r, col);
            ++iterations;
        } else {
            drop_rows.push_back(r);
        }
    }
    if (!drop_rows.empty()) {
        Tableau trimmed;
        trimmed.n_cols = tab.n_cols;
        trimmed.t.push_back(tab.t[0]);
        for (std::size_t r = 1; r <= tab.n_rows(); ++r) {
            if (std::find(drop_rows.begin(), drop_rows.end(), r) == drop_rows.end()) {
                trimmed.t.push_back(tab.t[r]);
                trimmed.basis.push_back(tab.basis[r - 1]);
            }
        }
        tab = std::move(trimmed);
    }

    // Phase 2: rebuild the cost row for the real objective and forbid the
    // artificial columns by zeroing them out of the tableau.
    for (std::size_t r = 1; r <= tab.n_rows(); ++r) {
        for (std::size_t c = n; c < tab.n_cols; ++c) tab.at(r, c) = 0.0;
    }
    for (std::size_t c = 0; c < n; ++c) {
        double s = lp.objective[c];
        for (std::size_t r = 1; r <= tab.n_rows(); ++r) s -= lp.objective[tab.basis[r - 1]] * tab.at(r, c);
        tab.at(0, c) = s;
    }
    for (std::size_t c = n; c < tab.n_cols; ++c) tab.at(0, c) = 1.0;  // never entering
    {
        double z = 0.0;
        for (std::size_t r = 1; r <= tab.n_rows(); ++r) z += lp.objective[tab.basis[r - 1]] * tab.at(r, tab.n_cols);
        tab.at(0, tab.n_cols) = -z;
    }

    const CoreStatus st = run_simplex(tab, opt_tol, iterations, iter_cap);
    if (st == CoreStatus::Unbounded) {
        return {LpStatus::Unbounded, {}, 0.0, iterations};
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t r = 1; r <= tab.n_rows(); ++r) {
        if (tab.basis[r - 1] < n) x[tab.basis[r - 1]] = tab.at(r, tab.n_cols);
    }
    double obj = 0.0;
    for (std::size_t c = 0; c < n; ++c) obj += lp.objective[c] * x[c];
    return {LpStatus::Optimal, std::move(x), obj, iterations};
}

L1AffineResult min_l1_affine(const std::vector<double>& c0, const DenseMatrix& k,
                             double feas_tol, double opt_tol) {
    const std::size_t n = c0.size();
    if (!k.empty() && k.rows() != n) {
        throw std::invalid_argument("min_l1_affine: K row count must match c0 length");
    }
    const std::size_t p = k.empty() ? 0 : k.cols();
    if (p == 0) {
        return {norm1(c0), std::vector<double>(n, 0.0)};
    }

    // Variables: t (n) | w+ (p) | w- (p) | s1 (n) | s2 (n).
    // Rows i:      t_i - (K w)_i - s1_i =  c0_i
    // Rows n + i:  t_i + (K w)_i - s2_i = -c0_i
    const std::size_t nv = 3 * n + 2 * p;
    LinearProgram lp;
    lp.objective.assign(nv, 0.0);
    for (std::size_t i = 0; i < n; ++i) lp.objective[i] = 1.0;
    lp.equalities = DenseMatrix(2 * n, nv);
    lp.rhs.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        lp.equalities(i, i) = 1.0;
        lp.equalities(n + i, i) = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            lp.equalities(i, n + j) = -k(i, j);
            lp.equalities(i, n + p + j) = k(i, j);
            lp.equalities(n + i, n + j) = k(i, j);
            lp.equalities(n + i, n + p + j) = -k(i, j);
        }
        lp.equalities(i, n + 2 * p + i) = -1.0;
        lp.equalities(n + i, n + 2 * p + n + i) = -1.0;
        lp.rhs[i] = c0[i];
        lp.rhs[n + i] = -c0[i];
    }

    const LpSolution sol = solve_lp(lp, feas_tol, opt_tol);
    if (sol.status != LpStatus::Optimal) {
        throw NumericError("min_l1_affine: inner LP did not reach Optimal");
    }
    std::vector<double> w(p);
    for (std::size_t j = 0; j < p; ++j) w[j] = sol.x[n + j] - sol.x[n + p + j];
    std::vector<double> u = k * w;
    return {norm1(add(c0, u)), std::move(u)};
}

L1EqualityResult min_l1_subject_to(const DenseMatrix& e, const std::vector<double>& f,
                                   double feas_tol, double opt_tol) {
    const std::size_t n = e.cols();
    const std::size_t m = e.rows();
    if (f.size() != m) throw std::invalid_argument("min_l1_subject_to: rhs length mismatch");

    LinearProgram lp;
    lp.objective.assign(2 * n, 1.0);
    lp.equalities = DenseMatrix(m, 2 * n);
    lp.rhs = f;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            lp.equalities(r, c) = e(r, c);
            lp.equalities(r, n + c) = -e(r, c);
        }
    }
    const LpSolution sol = solve_lp(lp, feas_tol, opt_tol);
    L1EqualityResult res;
    res.status = sol.status;
    res.iterations = sol.iterations;
    if (sol.status == LpStatus::Unbounded) {
        throw NumericError("min_l1_subject_to: unexpected unbounded LP");
    }
    if (sol.status == LpStatus::Optimal) {
        res.z.resize(n);
        for (std::size_t c = 0; c < n; ++c) res.z[c] = sol.x[c] - sol.x[n + c];
        res.value = norm1(res.z);
    }
    return res;
}

double min_l1_along_line(const std::vector<double>& c0, const std::vector<double>& u,
                         double* t_star) {
    if (c0.size() != u.size()) throw std::invalid_argument("min_l1_along_line: length mismatch");
    double best_val = norm1(c0);
    double best_t = 0.0;
    for (std::size_t i = 0; i < c0.size(); ++i) {
        if (std::abs(u[i]) < 1e-300) continue;
        const double t = -c0[i] / u[i];
        double val = 0.0;
        for (std::size_t j = 0; j < c0.size(); ++j) val += std::abs(c0[j] + t * u[j]);
        if (val < best_val) {
            best_val = val;
            best_t = t;
        }
    }
    if (t_star != nullptr) *t_star = best_t;
    return best_val;
}

}  // namespace nspkit
