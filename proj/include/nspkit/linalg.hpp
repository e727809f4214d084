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

/// Relative rank threshold: singular values above tol * sigma_max count
/// toward the rank. Scale-invariant by construction.
inline constexpr double kDefaultRankTol = 1e-9;

struct QrResult {
    DenseMatrix q;  // rows x min(rows, cols), orthonormal columns
    DenseMatrix r;  // min(rows, cols) x cols, upper triangular
};

/// Thin Householder QR. Works for any shape, including rank-deficient input
/// (zero pivot columns get an identity reflector). ||QR - M||_F stays below
/// 1e-10 * (1 + ||M||_F).
QrResult qr_decompose(const DenseMatrix& m);

struct SvdResult {
    std::vector<double> values;  // cols entries, nonincreasing
    DenseMatrix right_vectors;   // cols x cols orthogonal, columns match values
};

/// One-sided Jacobi SVD: orthogonalizes the columns of M by plane rotations,
/// accumulating the right singular vectors. Deterministic cyclic sweep order;
/// throws NumericError if 100 * cols sweeps do not converge. values has one
/// entry per column; for wide matrices the trailing cols - rows entries are
/// numerically zero.
SvdResult svd_decompose(const DenseMatrix& m);

/// Singular values of M, nonincreasing, min(rows, cols) entries.
std::vector<double> svd_values(const DenseMatrix& m);

/// Smallest of svd_values(M). For the stability constants nu_A / nu_D the
/// matrix must have full row rank, which the callers check.
double min_singular_value(const DenseMatrix& m);

/// Orthonormal basis of the numerical null space at the relative threshold
/// tol: right singular vectors whose singular value is <= tol * sigma_max.
struct KernelBasis {
    std::size_t ambient_dim = 0;
    DenseMatrix basis;  // ambient_dim x count, orthonormal columns
    double tol = kDefaultRankTol;

    std::size_t count() const { return basis.cols(); }
    std::vector<double> vector(std::size_t i) const { return basis.col(i); }
};

KernelBasis kernel_basis(const DenseMatrix& m, double tol = kDefaultRankTol);

/// Number of singular values above tol * sigma_max.
std::size_t rank(const DenseMatrix& m, double tol = kDefaultRankTol);

/// Right inverse D^T (D D^T)^{-1} of a full-row-rank D (d <= n), computed
/// through the QR factorization of D^T. Throws NumericError when D is
/// numerically rank deficient.
DenseMatrix right_pseudoinverse(const DenseMatrix& d);

/// Solve the square system a x = b by Gaussian elimination with partial
/// pivoting. Throws NumericError on a numerically singular matrix.
std::vector<double> solve_square(const DenseMatrix& a, const std::vector<double>& b);

}  // namespace nspkit
