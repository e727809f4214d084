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

#include "nspkit/dense_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nspkit {

namespace {
void check_finite(const std::vector<double>& entries) {
    for (double e : entries) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("DenseMatrix: entries must be finite");
        }
    }
}
}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("DenseMatrix: entries length must equal rows*cols");
    }
    check_finite(entries_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("DenseMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_finite(entries_);
}

DenseMatrix DenseMatrix::identity(std::size_t d) {
    DenseMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("DenseMatrix: dimension mismatch in product");
    DenseMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
        }
    }
    return p;
}

std::vector<double> DenseMatrix::operator*(const std::vector<double>& x) const {
    if (cols_ != x.size()) throw std::invalid_argument("DenseMatrix: dimension mismatch in mat-vec");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

std::vector<double> DenseMatrix::col(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<double> DenseMatrix::row(std::size_t i) const {
    return std::vector<double>(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void DenseMatrix::set_col(std::size_t j, const std::vector<double>& v) {
    if (v.size() != rows_) throw std::invalid_argument("DenseMatrix: set_col length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

DenseMatrix DenseMatrix::columns(const std::vector<std::size_t>& indices) const {
    DenseMatrix s(rows_, indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= cols_) throw std::invalid_argument("DenseMatrix: column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) s(i, j) = (*this)(i, indices[j]);
    }
    return s;
}

DenseMatrix DenseMatrix::hcat(const DenseMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("DenseMatrix: hcat row mismatch");
    DenseMatrix h(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) h(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j) h(i, cols_ + j) = rhs(i, j);
    }
    return h;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double e : entries_) s += e * e;
    return std::sqrt(s);
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double norm1(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

std::vector<double> scaled(const std::vector<double>& v, double s) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace nspkit
