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

#include "nspkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nspkit/errors.hpp"

namespace nspkit {

QrResult qr_decompose(const DenseMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t k = std::min(rows, cols);

    // Work on a full copy; reflectors are applied in place and Q is
    // accumulated afterwards by applying them to the leading identity block.
    DenseMatrix work = m;
    std::vector<std::vector<double>> reflectors;  // v per step, length rows - step
    reflectors.reserve(k);

    for (std::size_t step = 0; step < k; ++step) {
        std::vector<double> v(rows - step);
        double norm_sq = 0.0;
        for (std::size_t i = step; i < rows; ++i) {
            v[i - step] = work(i, step);
            norm_sq += v[i - step] * v[i - step];
        }
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) {
            reflectors.emplace_back();  // identity reflector for a zero column
            continue;
        }
        const double alpha = v[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        double v_norm_sq = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
        if (v_norm_sq == 0.0) {
            reflectors.emplace_back();
            continue;
        }
        // Apply H = I - 2 v v^T / (v^T v) to the trailing columns.
        for (std::size_t j = step; j < cols; ++j) {
            double proj = 0.0;
            for (std::size_t i = step; i < rows; ++i) proj += v[i - step] * work(i, j);
            proj = 2.0 * proj / v_norm_sq;
            for (std::size_t i = step; i < rows; ++i) work(i, j) -= proj * v[i - step];
        }
        work(step, step) = alpha;  // exact value, clears roundoff below the diagonal
        for (std::size_t i = step + 1; i < rows; ++i) work(i, step) = 0.0;
        reflectors.push_back(std::move(v));
    }

    DenseMatrix r(k, cols);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < cols; ++j) r(i, j) = work(i, j);

    // Q = H_0 ... H_{k-1} applied to the first k columns of the identity.
    DenseMatrix q(rows, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<double> e(rows, 0.0);
        e[j] = 1.0;
        for (std::size_t s = k; s-- > 0;) {
            const auto& v = reflectors[s];
            if (v.empty()) continue;
            double v_norm_sq = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
            double proj = 0.0;
            for (std::size_t i = s; i < rows; ++i) proj += v[i - s] * e[i];
            proj = 2.0 * proj / v_norm_sq;
            for (std::size_t i = s; i < rows; ++i) e[i] -= proj * v[i - s];
        }
        q.set_col(j, e);
    }

    // canonical sign: nonnegative diagonal of R (identity factors as itself)
    for (std::size_t i = 0; i < k; ++i) {
        if (r(i, i) < 0.0) {
            for (std::size_t j = i; j < cols; ++j) r(i, j) = -r(i, j);
            for (std::size_t row = 0; row < rows; ++row) q(row, i) = -q(row, i);
        }
    }
    return {std::move(q), std::move(r)};
}

SvdResult svd_decompose(const DenseMatrix& m) {
    const std::size_t n = m.cols();
    DenseMatrix a = m;  // columns get rotated into mutual orthogonality
    DenseMatrix v = DenseMatrix::identity(n);

    const std::size_t max_sweeps = 100 * std::max<std::size_t>(n, 1);
    const double ortho_tol = 1e-13;
    // Columns whose norm collapses to machine level relative to the matrix
    // are frozen: their singular value is zero at any sensible threshold and
    // further rotations only churn round-off.
    const double fro = m.frobenius_norm();
    const double zero_floor_sq = (1e-14 * fro) * (1e-14 * fro);

    // Column Gram entries are recomputed per pair; at desk scale (<= ~30
    // columns) that is cheaper to maintain than a cached Gram matrix.
    auto col_dot = [&](std::size_t i, std::size_t j) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * a(r, j);
        return s;
    };

    bool converged = (n <= 1);
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double app = col_dot(i, i);
                const double aqq = col_dot(j, j);
                if (app <= zero_floor_sq || aqq <= zero_floor_sq) continue;
                const double apq = col_dot(i, j);
                if (std::abs(apq) <= ortho_tol * std::sqrt(app * aqq) || apq == 0.0) continue;
                converged = false;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < a.rows(); ++r) {
                    const double x = a(r, i), y = a(r, j);
                    a(r, i) = c * x - s * y;
                    a(r, j) = s * x + c * y;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double x = v(r, i), y = v(r, j);
                    v(r, i) = c * x - s * y;
                    v(r, j) = s * x + c * y;
                }
            }
        }
    }
    if (!converged) {
        throw NumericError("svd_decompose: Jacobi sweeps did not converge within the cap");
    }

    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, j) * a(r, j);
        values[j] = std::sqrt(s);
    }

    // Stable sort by value, descending; reorder V accordingly.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    std::vector<double> sorted(n);
    DenseMatrix v_sorted(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted[j] = values[order[j]];
        v_sorted.set_col(j, v.col(order[j]));
    }
    return {std::move(sorted), std::move(v_sorted)};
}

std::vector<double> svd_values(const DenseMatrix& m) {
    // Run on the narrower orientation; singular values are shared.
    const SvdResult res = (m.rows() >= m.cols()) ? svd_decompose(m) : svd_decompose(m.transposed());
    std::vector<double> vals = res.values;
    vals.resize(std::min(m.rows(), m.cols()));
    return vals;
}

double min_singular_value(const DenseMatrix& m) {
    const std::vector<double> vals = svd_values(m);
    if (vals.empty()) throw std::invalid_argument("min_singular_value: empty matrix");
    return vals.back();
}

KernelBasis kernel_basis(const DenseMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("kernel_basis: tol must be positive");
    const SvdResult res = svd_decompose(m);
    const std::size_t n = m.cols();
    const double sigma_max = res.values.empty() ? 0.0 : res.values.front();
    std::size_t rk = 0;
    for (double s : res.values) {
        if (s > tol * sigma_max) ++rk;
    }
    std::vector<std::size_t> idx(n - rk);
    std::iota(idx.begin(), idx.end(), rk);
    KernelBasis kb;
    kb.ambient_dim = n;
    kb.basis = res.right_vectors.columns(idx);
    kb.tol = tol;
    return kb;
}

std::size_t rank(const DenseMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("rank: tol must be positive");
    const std::vector<double> vals = svd_values(m);
    const double sigma_max = vals.empty() ? 0.0 : vals.front();
    std::size_t rk = 0;
    for (double s : vals) {
        if (s > tol * sigma_max) ++rk;
    }
    return rk;
}

DenseMatrix right_pseudoinverse(const DenseMatrix& d) {
    if (d.rows() > d.cols()) {
        throw std::invalid_argument("right_pseudoinverse: needs d <= n (wide matrix)");
    }
    if (rank(d, kDefaultRankTol) < d.rows()) {
        throw NumericError("right_pseudoinverse: matrix is not full row rank");
    }
    // D^T = Q R with Q (n x d) orthonormal, R (d x d) upper triangular; then
    // D Q = R^T and the right inverse is Q R^{-T}.
    const QrResult qr = qr_decompose(d.transposed());
    const std::size_t dd = d.rows();
    // Columns of R^{-T}: forward-substitute R^T y = e_j.
    DenseMatrix rinv_t(dd, dd);
    for (std::size_t j = 0; j < dd; ++j) {
        std::vector<double> y(dd, 0.0);
        for (std::size_t i = 0; i < dd; ++i) {
            double s = (i == j) ? 1.0 : 0.0;
            for (std::size_t p = 0; p < i; ++p) s -= qr.r(p, i) * y[p];  // (R^T)(i,p) = R(p,i)
            const double diag = qr.r(i, i);
            if (std::abs(diag) < 1e-300) {
                throw NumericError("right_pseudoinverse: zero pivot in R");
            }
            y[i] = s / diag;
        }
        rinv_t.set_col(j, y);
    }
    return qr.q * rinv_t;
}

std::vector<double> solve_square(const DenseMatrix& a, const std::vector<double>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
    DenseMatrix work = a;
    std::vector<double> rhs = b;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(perm[col], col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double cand = std::abs(work(perm[r], col));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (best < 1e-300) throw NumericError("solve_square: singular matrix");
        std::swap(perm[col], perm[pivot]);
        const std::size_t pr = perm[col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const std::size_t rr = perm[r];
            const double f = work(rr, col) / work(pr, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) work(rr, c) -= f * work(pr, c);
            rhs[rr] -= f * rhs[pr];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[perm[i]];
        for (std::size_t c = i + 1; c < n; ++c) s -= work(perm[i], c) * x[c];
        x[i] = s / work(perm[i], i);
    }
    return x;
}

}  // namespace nspkit
