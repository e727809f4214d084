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

#include <string>

#include "nspkit/dense_matrix.hpp"

namespace nspkit {

// Shared plain-text matrix format: first line "rows cols", then one line per
// row with space-separated decimal literals. Written at 17 significant digits
// so that write/read round-trips are bit-exact for doubles.

std::string matrix_to_string(const DenseMatrix& m);
DenseMatrix matrix_from_string(const std::string& text);

void write_matrix(const std::string& path, const DenseMatrix& m);
DenseMatrix read_matrix(const std::string& path);

/// Column vectors ride the same format as n-by-1 matrices.
void write_vector(const std::string& path, const std::vector<double>& v);
std::vector<double> read_vector(const std::string& path);

}  // namespace nspkit
