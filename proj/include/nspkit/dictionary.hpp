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
#include <string>
#include <vector>

#include "nspkit/dense_matrix.hpp"
#include "nspkit/linalg.hpp"
#include "nspkit/properties.hpp"

namespace nspkit {

enum class DictionaryFamily { Identity, Gaussian, PerturbedBasis, RepeatColumns, AugmentColumn, Harmonic };

std::string family_name(DictionaryFamily family);

/// A d x n full-row-rank frame together with its verified reports. Every
/// constructor asserts full row rank and caches the spark report and kernel
/// basis; when the shape admits the one-dimensional-kernel inadmissibility
/// check, the certificate (or its absence) is cached too.
struct Dictionary {
    DenseMatrix matrix;
    DictionaryFamily family = DictionaryFamily::Identity;
    std::uint64_t seed = 0;                 // 0 for deterministic families
    double radius = 0.0;                    // perturbation radius, when used
    std::vector<std::size_t> repeated;      // index set I of repeat_columns
    std::vector<double> alpha;              // combination of augment_column
    SparkReport spark_report;
    KernelBasis kernel;
    std::optional<Certificate> certificate;  // order-2 certificate when applicable

    std::size_t dim() const { return matrix.rows(); }
    std::size_t size() const { return matrix.cols(); }
};

Dictionary identity_dictionary(std::size_t d);

/// i.i.d. standard normal entries in row-major fill order; byte-identical
/// for identical (d, n, seed).
Dictionary gaussian_dictionary(std::size_t d, std::size_t n, std::uint64_t seed);

/// [Phi, v] where Phi is a random orthonormal basis and v = phi_1 + r w with
/// a random unit w. The draw is rejected until v avoids every hyperplane
/// span(Phi without phi_i) (all kernel coordinates nonzero) and the kernel
/// vector carries more l1 mass on {1, d+1} than off it, so every returned
/// instance has a valid order-2 inadmissibility certificate. Throws
/// NumericError after 100 rejected draws (try a smaller r).
Dictionary perturbed_basis_dictionary(std::size_t d, double r, std::uint64_t seed);

/// [D, D_I]: the base dictionary with the I-indexed columns appended again.
Dictionary repeat_columns(const Dictionary& base, const std::vector<std::size_t>& index_set);

/// [B, B alpha] with ||alpha||_1 <= 1 (throws std::invalid_argument beyond
/// a 1e-12 slack).
Dictionary augment_column(const Dictionary& base, const std::vector<double>& alpha);

/// Real harmonic frame: the first d rows of the real Fourier system on n
/// points, frequency pairs first (cos/sin), then the constant row, then the
/// alternating row for even n. Rows are orthonormal; n = d gives an
/// orthogonal basis. Full-spark status is whatever the spark check verifies.
Dictionary harmonic_frame(std::size_t d, std::size_t n);

}  // namespace nspkit
