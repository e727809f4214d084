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
#include <limits>

#include "nspkit/dictionary.hpp"
#include "nspkit/errors.hpp"
#include "nspkit/properties.hpp"
#include "nspkit/rng.hpp"
#include "nspkit/simplex.hpp"

using namespace nspkit;

namespace {

DenseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

/// Dense scan over a one-dimensional kernel direction: fine grid plus a
/// ternary refinement, independent of the LP/breakpoint code paths.
double grid_scan_min(const std::vector<double>& c0, const std::vector<double>& u) {
    auto f = [&](double t) {
        double s = 0.0;
        for (std::size_t i = 0; i < c0.size(); ++i) s += std::abs(c0[i] + t * u[i]);
        return s;
    };
    double best = f(0.0);
    double best_t = 0.0;
    for (int i = -4000; i <= 4000; ++i) {
        const double t = static_cast<double>(i) * 0.005;
        const double v = f(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double lo = best_t - 0.005, hi = best_t + 0.005;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (f(m1) <= f(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    return std::min(best, f(0.5 * (lo + hi)));
}

}  // namespace

// ---------------------------------------------------------------------------
// SupportSet

TEST_CASE("support set basics") {
    const SupportSet t({0, 2}, 3);
    CHECK(t.size() == 2);
    CHECK(t.contains(0));
    CHECK(!t.contains(1));
    CHECK(t.complement().indices() == std::vector<std::size_t>{1});
    const std::vector<double> v{1.0, -2.0, 3.0};
    CHECK(t.restrict_to(v) == std::vector<double>{1.0, 0.0, 3.0});
    CHECK(t.mass_on(v) == doctest::Approx(4.0));
    CHECK(t.mass_off(v) == doctest::Approx(2.0));
    CHECK_THROWS(SupportSet({0, 0}, 3));
    CHECK_THROWS(SupportSet({3}, 3));
}

// ---------------------------------------------------------------------------
// Spark

TEST_CASE("spark detects a duplicated column") {
    const DenseMatrix d{{1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
    const SparkReport rep = spark(d);
    REQUIRE(rep.spark.has_value());
    CHECK(*rep.spark == 2);
    CHECK(!rep.full_spark);
    CHECK(rep.witness == std::vector<std::size_t>{0, 2});
}

TEST_CASE("spark of a generic 2x3 frame is d+1") {
    const DenseMatrix d{{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}};
    const SparkReport rep = spark(d);
    REQUIRE(rep.spark.has_value());
    CHECK(*rep.spark == 3);
    CHECK(rep.full_spark);
}

TEST_CASE("spark of the identity reports no dependence") {
    const SparkReport rep = spark(DenseMatrix::identity(4));
    CHECK(!rep.spark.has_value());
    CHECK(rep.full_spark);
    CHECK(rep.witness.empty());
}

TEST_CASE("a zero column forces spark 1") {
    const DenseMatrix d{{1.0, 0.0}, {0.0, 0.0}};
    const SparkReport rep = spark(d);
    REQUIRE(rep.spark.has_value());
    CHECK(*rep.spark == 1);
    CHECK(rep.witness == std::vector<std::size_t>{1});
}

TEST_CASE("spark honors its combinatorial budget") {
    Rng rng(3);
    const DenseMatrix d = random_matrix(rng, 6, 12);
    CHECK_THROWS_AS(spark(d, kDefaultRankTol, 10), NumericError);
}

// ---------------------------------------------------------------------------
// check_nsp

TEST_CASE("invertible square matrices hold every order vacuously") {
    const DenseMatrix m{{2.0, 1.0}, {1.0, 1.0}};
    for (std::size_t k = 1; k <= 2; ++k) {
        const NspReport rep = check_nsp(m, k);
        CHECK(rep.holds);
        CHECK(rep.worst_ratio == 0.0);
    }
}

TEST_CASE("the equality boundary fails strictness") {
    const DenseMatrix m{{1.0, -1.0}};
    const NspReport rep = check_nsp(m, 1);
    CHECK(!rep.holds);
    CHECK(rep.worst_ratio >= 1.0 - kDefaultStrictMargin);
    REQUIRE(rep.witness_v.has_value());
    const auto& v = *rep.witness_v;
    CHECK(std::abs(v[0] - v[1]) <= 1e-8);  // kernel direction (1, 1)
}

TEST_CASE("order-1 holds with ratio one half on the (1,1,1)-kernel matrix") {
    const DenseMatrix m{{1.0, 0.0, -1.0}, {0.0, 1.0, -1.0}};
    const NspReport rep = check_nsp(m, 1);
    CHECK(rep.holds);
    CHECK(rep.worst_ratio == doctest::Approx(0.5).epsilon(1e-8));
    const NspReport rep2 = check_nsp(m, 2);
    CHECK(!rep2.holds);  // ||v_T||_1 = 2|t| vs ||v_{T^c}||_1 = |t|
}

TEST_CASE("a kernel vector supported inside T is an unbounded failure") {
    const DenseMatrix m{{0.0, 1.0}};  // kernel contains e_1
    const NspReport rep = check_nsp(m, 1);
    CHECK(!rep.holds);
    CHECK(std::isinf(rep.worst_ratio));
    REQUIRE(rep.witness_t.has_value());
    CHECK(rep.witness_t->indices() == std::vector<std::size_t>{0});
}

TEST_CASE("check_nsp validates the order") {
    CHECK_THROWS(check_nsp(DenseMatrix::identity(2), 0));
    CHECK_THROWS(check_nsp(DenseMatrix::identity(2), 3));
}

// ---------------------------------------------------------------------------
// dnsp_margin

TEST_CASE("margin with the identity dictionary reduces to the plain split") {
    const DenseMatrix a{{1.0, 0.0, -1.0}, {0.0, 1.0, -1.0}};
    const DenseMatrix d = DenseMatrix::identity(3);
    const std::vector<double> v{1.0, 1.0, 1.0};  // in ker A
    CHECK(dnsp_margin(a, d, v, SupportSet({0}, 3)) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(dnsp_margin(a, d, v, SupportSet({0, 1}, 3)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("margin of a vector vanishing on T is minus the off-mass") {
    const DenseMatrix a{{1.0, 0.0, 0.0}};
    const DenseMatrix d = DenseMatrix::identity(3);
    const std::vector<double> w{0.0, 1.0, 0.0};  // in ker a, zero on T = {0}
    CHECK(dnsp_margin(a, d, w, SupportSet({0}, 3)) == doctest::Approx(-1.0));
}

TEST_CASE("margin on the correlated 2x3 dictionary sits exactly at zero") {
    const DenseMatrix a{{1.0, 1.0}};
    const DenseMatrix d{{1.0, 0.0, 0.9}, {0.0, 1.0, 0.1}};
    // AD = [1, 1, 1]; v = (0.9, 0.1, -1) lies in ker(AD) with D v != 0
    const std::vector<double> v{0.9, 0.1, -1.0};
    const SupportSet t({0, 2}, 3);
    const double margin = dnsp_margin(a, d, v, t);
    // independent dense-scan oracle over the kernel line of D
    const double quotient = grid_scan_min(t.restrict_to(v), {0.9, 0.1, -1.0});
    CHECK(margin == doctest::Approx(quotient - 0.1).epsilon(1e-9));
    CHECK(margin == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("margin is positively homogeneous and symmetric") {
    Rng rng(17);
    int done = 0;
    while (done < 40) {
        const std::size_t dd = 2 + rng.uniform_index(3);
        const std::size_t n = dd + 1 + rng.uniform_index(2);
        const std::size_t m = 1 + rng.uniform_index(dd - 1);
        const DenseMatrix a = random_matrix(rng, m, dd);
        const DenseMatrix d = random_matrix(rng, dd, n);
        const KernelBasis ker = kernel_basis(a * d);
        if (ker.count() == 0) continue;
        const std::vector<double> v = ker.vector(0);
        if (norm2(d * v) <= 1e-6) continue;
        const SupportSet t({0, 1}, n);
        const double base = dnsp_margin(a, d, v, t);
        const double lambda = 0.5 + 2.0 * rng.uniform();
        CHECK(dnsp_margin(a, d, scaled(v, lambda), t) ==
              doctest::Approx(lambda * base).epsilon(1e-9));
        CHECK(dnsp_margin(a, d, scaled(v, -1.0), t) == doctest::Approx(base).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("margin preconditions are enforced") {
    const DenseMatrix a{{1.0, 1.0}};
    const DenseMatrix d{{1.0, 0.0, 0.9}, {0.0, 1.0, 0.1}};
    // D v = 0 violates the nonvanishing precondition
    CHECK_THROWS_AS(dnsp_margin(a, d, {-0.9, -0.1, 1.0}, SupportSet({0}, 3)),
                    std::invalid_argument);
    // A D v != 0 violates the kernel precondition
    CHECK_THROWS_AS(dnsp_margin(a, d, {1.0, 0.0, 0.0}, SupportSet({0}, 3)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Inadmissibility certificate

TEST_CASE("correlated 2x3 dictionary carries an order-2 certificate") {
    const DenseMatrix d{{1.0, 0.0, 0.9}, {0.0, 1.0, 0.1}};
    const auto cert = inadmissibility_certificate(d, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->t.indices() == std::vector<std::size_t>{0, 2});
    CHECK(cert->mass_on_t > cert->mass_off_t + kDefaultStrictMargin);
    CHECK(cert->min_off_support > kDefaultSupportTol);
    const double scale = std::sqrt(1.82);
    CHECK(std::abs(cert->u[0]) == doctest::Approx(0.9 / scale));
    CHECK(std::abs(cert->u[1]) == doctest::Approx(0.1 / scale));
    CHECK(std::abs(cert->u[2]) == doctest::Approx(1.0 / scale));
}

TEST_CASE("perfectly correlated duplicate admits no certificate") {
    const DenseMatrix d{{1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
    CHECK(!inadmissibility_certificate(d, 2).has_value());
}

TEST_CASE("certificate gates on shape, kernel dimension, and order") {
    CHECK(!inadmissibility_certificate(DenseMatrix::identity(3), 2).has_value());
    const DenseMatrix d{{1.0, 0.0, 0.9}, {0.0, 1.0, 0.1}};
    CHECK(!inadmissibility_certificate(d, 1).has_value());
    const DenseMatrix wide{{1.0, 0.0, 0.9, 0.5}, {0.0, 1.0, 0.1, 0.5}};
    CHECK(!inadmissibility_certificate(wide, 2).has_value());
}

// ---------------------------------------------------------------------------
// check_dnsp

TEST_CASE("identity dictionary reduces to the plain property on 200 seeds") {
    Rng rng(2025);
    int done = 0;
    while (done < 200) {
        const std::size_t d = 2 + rng.uniform_index(4);
        const std::size_t m = 1 + rng.uniform_index(d - 1);
        const std::size_t k = 1 + rng.uniform_index(2);
        if (k > d) continue;
        const DenseMatrix a = random_matrix(rng, m, d);
        const NspReport nsp = check_nsp(a, k);
        const DnspReport dnsp = check_dnsp(a, DenseMatrix::identity(d), k);
        REQUIRE(dnsp.decision != DnspDecision::Undecided);
        CHECK((dnsp.decision == DnspDecision::Holds) == nsp.holds);
        CHECK(dnsp.method == DnspMethod::FullSparkReduction);
        ++done;
    }
}

TEST_CASE("full-spark dictionary with passing product holds") {
    const DenseMatrix a{{1.0, 0.0, -1.0}, {0.0, 1.0, -1.0}};
    const DnspReport rep = check_dnsp(a, DenseMatrix::identity(3), 1);
    CHECK(rep.decision == DnspDecision::Holds);
    CHECK(rep.method == DnspMethod::FullSparkReduction);
    REQUIRE(rep.nsp_report.has_value());
    CHECK(rep.nsp_report->worst_ratio == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("certificate dictionaries fail via the lemma path with a witness") {
    const DenseMatrix d{{1.0, 0.0, 0.9}, {0.0, 1.0, 0.1}};
    const DenseMatrix a{{1.0, 1.0}};  // m = 1 < d = 2
    const DnspReport rep = check_dnsp(a, d, 2);
    CHECK(rep.decision == DnspDecision::Fails);
    CHECK(rep.method == DnspMethod::LemmaCertificate);
    REQUIRE(rep.certificate.has_value());
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->margin >= -kDefaultStrictMargin);
    const double direct = dnsp_margin(a, d, rep.witness->v, rep.witness->t);
    CHECK(direct == doctest::Approx(rep.witness->margin).epsilon(1e-9));
}

TEST_CASE("vacuous kernel gives a vacuous hold") {
    const DnspReport rep = check_dnsp(DenseMatrix::identity(2), DenseMatrix::identity(2), 1);
    CHECK(rep.decision == DnspDecision::Holds);
    CHECK(rep.vacuous_kernel);
}

TEST_CASE("monotonicity: order-2 holds implies order-1 holds") {
    Rng rng(31);
    int holds_seen = 0;
    int attempts = 0;
    while (holds_seen < 20 && attempts < 400) {
        ++attempts;
        const std::size_t d = 3 + rng.uniform_index(3);
        const std::size_t n = d + rng.uniform_index(2);
        const DenseMatrix a = random_matrix(rng, d - 1, d);
        const DenseMatrix dict = random_matrix(rng, d, n);
        const DnspReport r2 = check_dnsp(a, dict, 2);
        if (r2.decision != DnspDecision::Holds) continue;
        ++holds_seen;
        const DnspReport r1 = check_dnsp(a, dict, 1);
        CHECK(r1.decision == DnspDecision::Holds);
    }
    CHECK(holds_seen >= 10);
}

TEST_CASE("certificate soundness: every undersampling matrix fails") {
    Rng rng(47);
    const Dictionary dict = perturbed_basis_dictionary(3, 0.25, 99);
    REQUIRE(dict.certificate.has_value());
    int witnesses = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng.uniform_index(2);  // m < d = 3
        const DenseMatrix a = random_matrix(rng, m, 3);
        const DnspReport rep = check_dnsp(a, dict.matrix, 2);
        CHECK(rep.decision == DnspDecision::Fails);
        if (rep.witness) ++witnesses;
    }
    // the constructive candidates find a witness essentially always
    CHECK(witnesses >= 95);
}

TEST_CASE("repeat-columns instances stay decisive or honestly undecided") {
    // duplicated column: no certificate, not full spark; the checker must
    // never claim Holds, only Fails with a witness or Undecided
    Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const DenseMatrix a = random_matrix(rng, 1, 2);
        const DenseMatrix d{{1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
        DnspOptions opts;
        opts.sampling_budget = 2000;
        opts.seed = rng.next_u64();
        const DnspReport rep = check_dnsp(a, d, 1, opts);
        CHECK(rep.decision != DnspDecision::Holds);
        if (rep.decision == DnspDecision::Fails) {
            REQUIRE(rep.witness.has_value());
            CHECK(rep.witness->margin >= -opts.strict_margin);
        }
    }
}

// ---------------------------------------------------------------------------
// SNSP constant and the stability constants

TEST_CASE("trivial product kernel yields the vacuous sentinel") {
    const SnspEstimate est = snsp_constant(DenseMatrix::identity(2), DenseMatrix::identity(2), 1);
    CHECK(std::isinf(est.c));
    CHECK(est.method == SnspMethod::VacuousKernel);
}

TEST_CASE("one-dimensional kernel constant matches the closed form") {
    const DenseMatrix a{{1.0, 0.0, -1.0}, {0.0, 1.0, -1.0}};
    const SnspEstimate est = snsp_constant(a, DenseMatrix::identity(3), 1);
    CHECK(est.method == SnspMethod::ExactDim1);
    // kernel direction (1,1,1)/sqrt(3): min over |T| = 1 of (2 - 1)/sqrt(3)
    CHECK(est.c == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("snsp constant is zero when the property fails") {
    const DenseMatrix a{{1.0, 1.0}};
    const SnspEstimate est = snsp_constant(a, DenseMatrix::identity(2), 1);
    CHECK(est.c == 0.0);
    CHECK(est.method == SnspMethod::NotApplicable);
}

TEST_CASE("two-dimensional kernels go through the mesh and stay positive") {
    Rng rng(77);
    int done = 0;
    while (done < 5) {
        const std::size_t d = 4;
        const DenseMatrix a = random_matrix(rng, 2, d);  // dim ker A = 2
        const DnspReport rep = check_dnsp(a, DenseMatrix::identity(d), 1);
        if (rep.decision != DnspDecision::Holds) continue;
        const SnspEstimate est = snsp_constant(a, DenseMatrix::identity(d), 1);
        CHECK(est.method == SnspMethod::MeshDim2);
        CHECK(est.c > 0.0);
        CHECK(est.mesh_points == 10000);
        // direct fine scan over the circle as an independent oracle
        const KernelBasis ker = kernel_basis(a);
        double direct = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 20000; ++i) {
            const double theta = 3.14159265358979323846 * i / 20000.0;
            const std::vector<double> v =
                ker.basis * std::vector<double>{std::cos(theta), std::sin(theta)};
            for (std::size_t j = 0; j < d; ++j) {
                const SupportSet t({j}, d);
                direct = std::min(direct, (t.mass_off(v) - t.mass_on(v)) / norm2(v));
            }
        }
        CHECK(est.c == doctest::Approx(direct).epsilon(5e-3));
        CHECK(est.c <= direct + 1e-6);  // the refined mesh is at least as sharp
        ++done;
    }
}

TEST_CASE("stability constants by direct substitution") {
    const StabilityConstants a = stability_constants(2.0, 1.0, 1.0, 4);
    CHECK(a.c1 == doctest::Approx(1.0));
    CHECK(a.c2 == doctest::Approx(4.0));
    const StabilityConstants b = stability_constants(1.0, 1.0, 1.0, 1);
    CHECK(b.c1 == doctest::Approx(2.0));
    CHECK(b.c2 == doctest::Approx(4.0));
    CHECK_THROWS(stability_constants(0.0, 1.0, 1.0, 1));
    CHECK_THROWS(stability_constants(1.0, -1.0, 1.0, 1));
    CHECK_THROWS(stability_constants(1.0, 1.0, 0.0, 1));
}
