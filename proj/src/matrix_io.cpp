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

#include "nspkit/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nspkit {

std::string matrix_to_string(const DenseMatrix& m) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%zu %zu\n", m.rows(), m.cols());
    out += buf;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
            out += buf;
            out += (j + 1 == m.cols()) ? '\n' : ' ';
        }
    }
    return out;
}

DenseMatrix matrix_from_string(const std::string& text) {
    std::istringstream in(text);
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw std::invalid_argument("matrix text: bad header");
    std::vector<double> entries(rows * cols);
    for (auto& e : entries) {
        if (!(in >> e)) throw std::invalid_argument("matrix text: too few entries");
    }
    double extra;
    if (in >> extra) throw std::invalid_argument("matrix text: trailing data");
    return DenseMatrix(rows, cols, std::move(entries));
}

void write_matrix(const std::string& path, const DenseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << matrix_to_string(m);
    if (!out) throw std::runtime_error("write failed: " + path);
}

DenseMatrix read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_string(buf.str());
}

void write_vector(const std::string& path, const std::vector<double>& v) {
    write_matrix(path, DenseMatrix(v.size(), 1, v));
}

std::vector<double> read_vector(const std::string& path) {
    DenseMatrix m = read_matrix(path);
    if (m.cols() != 1) throw std::invalid_argument("vector file must have one column: " + path);
    return m.entries();
}

}  // namespace nspkit
