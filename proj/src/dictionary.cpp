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

#include "nspkit/dictionary.hpp"

#include <cmath>
#include <stdexcept>

#include "nspkit/errors.hpp"
#include "nspkit/rng.hpp"

namespace nspkit {

namespace {

constexpr double kPi = 3.14159265358979323846;

Dictionary finalize(DenseMatrix matrix, DictionaryFamily family) {
    Dictionary dict;
    dict.matrix = std::move(matrix);
    dict.family = family;
    if (dict.matrix.cols() < dict.matrix.rows()) {
        throw std::invalid_argument("dictionary: need n >= d");
    }
    if (rank(dict.matrix) < dict.matrix.rows()) {
        throw NumericError("dictionary: matrix is not full row rank");
    }
    dict.spark_report = spark(dict.matrix);
    dict.kernel = kernel_basis(dict.matrix);
    if (dict.matrix.cols() == dict.matrix.rows() + 1 && dict.kernel.count() == 1) {
        dict.certificate = inadmissibility_certificate(dict.matrix, 2);
    }
    return dict;
}

}  // namespace

std::string family_name(DictionaryFamily family) {
    switch (family) {
        case DictionaryFamily::Identity: return "identity";
        case DictionaryFamily::Gaussian: return "gaussian";
        case DictionaryFamily::PerturbedBasis: return "perturbed-basis";
        case DictionaryFamily::RepeatColumns: return "repeat-columns";
        case DictionaryFamily::AugmentColumn: return "augment-column";
        case DictionaryFamily::Harmonic: return "harmonic";
    }
    return "unknown";
}

Dictionary identity_dictionary(std::size_t d) {
    if (d == 0) throw std::invalid_argument("identity_dictionary: d must be >= 1");
    return finalize(DenseMatrix::identity(d), DictionaryFamily::Identity);
}

Dictionary gaussian_dictionary(std::size_t d, std::size_t n, std::uint64_t seed) {
    if (d == 0 || n < d) throw std::invalid_argument("gaussian_dictionary: need 1 <= d <= n");
    Rng rng(seed);
    DenseMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.normal();
    Dictionary dict = finalize(std::move(m), DictionaryFamily::Gaussian);
    dict.seed = seed;
    return dict;
}

Dictionary perturbed_basis_dictionary(std::size_t d, double r, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("perturbed_basis_dictionary: d must be >= 2");
    if (r <= 0.0 || !std::isfinite(r)) {
        throw std::invalid_argument("perturbed_basis_dictionary: r must be positive");
    }
    Rng rng(seed);

    // random orthonormal basis; qr_decompose is sign-canonical, so this is a
    // function of the seed only
    DenseMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.normal();
    const DenseMatrix phi = qr_decompose(g).q;

    const std::vector<double> phi1 = phi.col(0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const std::vector<double> w = rng.unit_vector(d);
        const std::vector<double> v = add(phi1, scaled(w, r));

        // kernel of [Phi, v] is spanned by (Phi^T v, -1)
        std::vector<double> u(d + 1);
        bool off_hyperplanes = true;
        for (std::size_t i = 0; i < d; ++i) {
            u[i] = dot(phi.col(i), v);
            if (std::abs(u[i]) <= kDefaultSupportTol) off_hyperplanes = false;
        }
        u[d] = -1.0;
        if (!off_hyperplanes) continue;

        const double scale = norm2(u);
        for (auto& x : u) x /= scale;
        // lemma conditions on T = {first basis index, appended column}
        const double on = std::abs(u[0]) + std::abs(u[d]);
        const double off = norm1(u) - on;
        if (on <= off + kDefaultStrictMargin) continue;
        const double min_coord = std::min(std::abs(u[0]), std::abs(u[d]));
        double min_off = min_coord;  // all coordinates participate in some T^c
        for (std::size_t i = 1; i < d; ++i) min_off = std::min(min_off, std::abs(u[i]));
        if (min_off <= kDefaultSupportTol) continue;

        DenseMatrix m(d, d + 1);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) m(i, j) = phi(i, j);
            m(i, d) = v[i];
        }
        Dictionary dict = finalize(std::move(m), DictionaryFamily::PerturbedBasis);
        dict.seed = seed;
        dict.radius = r;
        if (!dict.certificate) {
            throw NumericError("perturbed_basis_dictionary: accepted draw lost its certificate");
        }
        return dict;
    }
    throw NumericError("perturbed_basis_dictionary: 100 draws rejected; try a smaller r");
}

Dictionary repeat_columns(const Dictionary& base, const std::vector<std::size_t>& index_set) {
    for (std::size_t i : index_set) {
        if (i >= base.size()) throw std::invalid_argument("repeat_columns: index out of range");
    }
    DenseMatrix m = base.matrix.hcat(base.matrix.columns(index_set));
    Dictionary dict = finalize(std::move(m), DictionaryFamily::RepeatColumns);
    dict.seed = base.seed;
    dict.repeated = index_set;
    return dict;
}

Dictionary augment_column(const Dictionary& base, const std::vector<double>& alpha) {
    if (alpha.size() != base.size()) throw std::invalid_argument("augment_column: alpha length mismatch");
    if (norm1(alpha) > 1.0 + 1e-12) {
        throw std::invalid_argument("augment_column: ||alpha||_1 must be <= 1");
    }
    const std::vector<double> col = base.matrix * alpha;
    DenseMatrix m(base.dim(), base.size() + 1);
    for (std::size_t i = 0; i < base.dim(); ++i) {
        for (std::size_t j = 0; j < base.size(); ++j) m(i, j) = base.matrix(i, j);
        m(i, base.size()) = col[i];
    }
    Dictionary dict = finalize(std::move(m), DictionaryFamily::AugmentColumn);
    dict.seed = base.seed;
    dict.alpha = alpha;
    return dict;
}

Dictionary harmonic_frame(std::size_t d, std::size_t n) {
    if (d == 0 || n < d) throw std::invalid_argument("harmonic_frame: need 1 <= d <= n");

    // row pool of the real Fourier system on n points: cos/sin pairs for the
    // low frequencies, then the constant row, then the alternating row for
    // even n; the pool has exactly n orthonormal rows
    std::vector<std::vector<double>> pool;
    const std::size_t pairs = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    const double pair_scale = std::sqrt(2.0 / static_cast<double>(n));
    for (std::size_t f = 1; f <= pairs; ++f) {
        std::vector<double> cos_row(n), sin_row(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = 2.0 * kPi * static_cast<double>(f) * static_cast<double>(j) /
                                 static_cast<double>(n);
            cos_row[j] = pair_scale * std::cos(angle);
            sin_row[j] = pair_scale * std::sin(angle);
        }
        pool.push_back(std::move(cos_row));
        pool.push_back(std::move(sin_row));
    }
    const double flat_scale = 1.0 / std::sqrt(static_cast<double>(n));
    pool.emplace_back(n, flat_scale);
    if (n % 2 == 0) {
        std::vector<double> alt(n);
        for (std::size_t j = 0; j < n; ++j) alt[j] = (j % 2 == 0) ? flat_scale : -flat_scale;
        pool.push_back(std::move(alt));
    }

    DenseMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = pool[i][j];
    }
    return finalize(std::move(m), DictionaryFamily::Harmonic);
}

}  // namespace nspkit
