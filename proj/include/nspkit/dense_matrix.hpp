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
#include <initializer_list>
#include <vector>

namespace nspkit {

/// Row-major dense real matrix. Entries are validated to be finite on
/// construction; all operations below preserve finiteness for finite inputs.
/// Values are immutable in spirit: nothing here mutates shared state, so
/// instances are safe to share across threads once built.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const { return entries_; }

    DenseMatrix transposed() const;
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    std::vector<double> operator*(const std::vector<double>& x) const;

    std::vector<double> col(std::size_t j) const;
    std::vector<double> row(std::size_t i) const;
    void set_col(std::size_t j, const std::vector<double>& v);

    /// Submatrix formed by the given column indices, in the given order.
    DenseMatrix columns(const std::vector<std::size_t>& indices) const;

    /// [this | rhs] side by side; row counts must match.
    DenseMatrix hcat(const DenseMatrix& rhs) const;

    double frobenius_norm() const;
    double max_abs() const;

    bool operator==(const DenseMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

// Small vector helpers shared across the library. Vectors are plain
// std::vector<double>; these stay free functions on purpose.
double norm1(const std::vector<double>& v);
double norm2(const std::vector<double>& v);
double norm_inf(const std::vector<double>& v);
double dot(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scaled(const std::vector<double>& v, double s);
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b);
bool all_finite(const std::vector<double>& v);

}  // namespace nspkit
