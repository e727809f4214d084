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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nspkit/dictionary.hpp"
#include "nspkit/errors.hpp"
#include "nspkit/rng.hpp"

using namespace nspkit;

TEST_CASE("identity dictionary") {
    const Dictionary dict = identity_dictionary(3);
    CHECK(dict.matrix == DenseMatrix::identity(3));
    CHECK(!dict.spark_report.spark.has_value());
    CHECK(dict.spark_report.full_spark);
    CHECK(dict.kernel.count() == 0);
}

TEST_CASE("gaussian dictionaries are reproducible and usually full spark") {
    const Dictionary a = gaussian_dictionary(3, 5, 12345);
    const Dictionary b = gaussian_dictionary(3, 5, 12345);
    CHECK(a.matrix == b.matrix);  // byte-identical entries
    CHECK(a.spark_report.full_spark);

    const Dictionary square = gaussian_dictionary(2, 2, 7);
    CHECK(!square.spark_report.spark.has_value());

    const Dictionary c = gaussian_dictionary(3, 5, 54321);
    CHECK(!(a.matrix == c.matrix));
}

TEST_CASE("perturbed basis carries a certificate and avoids the hyperplanes") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 10ULL, 77ULL}) {
        const Dictionary dict = perturbed_basis_dictionary(3, 0.2, seed);
        CHECK(dict.dim() == 3);
        CHECK(dict.size() == 4);
        REQUIRE(dict.certificate.has_value());
        CHECK(dict.certificate->mass_on_t >
              dict.certificate->mass_off_t + kDefaultStrictMargin);
        // every kernel coordinate is nonzero (v avoids all hyperplanes);
        // the raw inner products exceed 1e-8 and the normalization factor
        // stays below 2, so 5e-9 is a safe floor on the unit kernel vector
        REQUIRE(dict.kernel.count() == 1);
        for (double x : dict.kernel.vector(0)) CHECK(std::abs(x) > 5e-9);
        // reproducibility
        const Dictionary again = perturbed_basis_dictionary(3, 0.2, seed);
        CHECK(dict.matrix == again.matrix);
    }
}

TEST_CASE("perturbed basis matches the worked 2x3 numbers") {
    // with Phi = I2 and w = (-0.4472, 0.8944), v = phi_1 + 0.2 w lands near
    // (0.911, 0.179) and the kernel vector is proportional to (v, -1);
    // reproduce the construction by hand to cross-check the lemma numbers
    const std::vector<double> w{-1.0 / std::sqrt(5.0), 2.0 / std::sqrt(5.0)};
    const std::vector<double> v{1.0 + 0.2 * w[0], 0.2 * w[1]};
    CHECK(v[0] == doctest::Approx(0.9106).epsilon(1e-3));
    CHECK(v[1] == doctest::Approx(0.1789).epsilon(1e-3));
    DenseMatrix d(2, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 1.0;
    d(0, 2) = v[0];
    d(1, 2) = v[1];
    const auto cert = inadmissibility_certificate(d, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->t.indices() == std::vector<std::size_t>{0, 2});
    CHECK(cert->mass_on_t == doctest::Approx((v[0] + 1.0) / norm2({v[0], v[1], -1.0})));
}

TEST_CASE("perturbed basis rejects bad radii") {
    CHECK_THROWS_AS(perturbed_basis_dictionary(3, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(perturbed_basis_dictionary(3, -0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(perturbed_basis_dictionary(1, 0.2, 1), std::invalid_argument);
}

TEST_CASE("repeat columns duplicates and destroys full spark") {
    const Dictionary base = identity_dictionary(2);
    const Dictionary d = repeat_columns(base, {0});
    CHECK(d.size() == 3);
    CHECK(d.matrix.col(2) == base.matrix.col(0));
    REQUIRE(d.spark_report.spark.has_value());
    CHECK(*d.spark_report.spark == 2);
    CHECK(!d.spark_report.full_spark);

    const Dictionary unchanged = repeat_columns(base, {});
    CHECK(unchanged.matrix == base.matrix);

    CHECK_THROWS_AS(repeat_columns(base, {5}), std::invalid_argument);
}

TEST_CASE("augment column appends the combination") {
    const Dictionary base = gaussian_dictionary(2, 3, 9);
    const Dictionary dup = augment_column(base, {1.0, 0.0, 0.0});
    CHECK(dup.matrix.col(3) == base.matrix.col(0));
    REQUIRE(dup.spark_report.spark.has_value());
    CHECK(*dup.spark_report.spark == 2);

    const Dictionary zero = augment_column(base, {0.0, 0.0, 0.0});
    CHECK(norm2(zero.matrix.col(3)) == 0.0);
    CHECK(*zero.spark_report.spark == 1);  // a zero column is dependent alone

    const Dictionary mid = augment_column(base, {0.5, 0.5, 0.0});
    const auto expect = add(scaled(base.matrix.col(0), 0.5), scaled(base.matrix.col(1), 0.5));
    CHECK(norm2(sub(mid.matrix.col(3), expect)) <= 1e-15);

    CHECK_THROWS_AS(augment_column(base, {0.8, 0.4, 0.0}), std::invalid_argument);
}

TEST_CASE("harmonic frames: orthogonal at n = d, Mercedes-Benz at 2x3") {
    const Dictionary basis = harmonic_frame(3, 3);
    const DenseMatrix gram = basis.matrix * basis.matrix.transposed();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(gram(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));

    const Dictionary mb = harmonic_frame(2, 3);
    CHECK(mb.spark_report.full_spark);
    // equiangular: all pairwise column inner products equal
    const double g01 = dot(mb.matrix.col(0), mb.matrix.col(1));
    const double g02 = dot(mb.matrix.col(0), mb.matrix.col(2));
    const double g12 = dot(mb.matrix.col(1), mb.matrix.col(2));
    CHECK(g01 == doctest::Approx(g02).epsilon(1e-10));
    CHECK(g01 == doctest::Approx(g12).epsilon(1e-10));

    // determinism
    CHECK(harmonic_frame(2, 3).matrix == mb.matrix);
}

TEST_CASE("harmonic frames always have orthonormal rows") {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::size_t d = 1; d <= n; ++d) {
            const Dictionary frame = harmonic_frame(d, n);
            const DenseMatrix gram = frame.matrix * frame.matrix.transposed();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    CHECK(gram(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("full row rank is asserted at construction") {
    // a repeat of a rank-deficient base cannot arise through the factory;
    // the factory itself must reject degenerate gaussian shapes
    CHECK_THROWS(gaussian_dictionary(0, 2, 1));
    CHECK_THROWS(gaussian_dictionary(3, 2, 1));
}
