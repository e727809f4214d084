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
#include <utility>
#include <vector>

#include "nspkit/dense_matrix.hpp"
#include "nspkit/linalg.hpp"

namespace nspkit {

/// Strict inequalities are certified only beyond this absolute margin, after
/// the standard normalization ||v_{T^c}||_1 <= 1. It separates genuine
/// boundary ties (duplicated columns and the like) from LP round-off.
inline constexpr double kDefaultStrictMargin = 1e-7;

/// Support threshold: a coordinate counts as nonzero above this magnitude
/// (used by the certificate's supp(u) condition and the kernel coordinate
/// checks of the perturbed-basis construction).
inline constexpr double kDefaultSupportTol = 1e-8;

/// Sorted set of coordinate indices (0-based) inside an ambient dimension.
class SupportSet {
public:
    SupportSet() = default;
    SupportSet(std::vector<std::size_t> indices, std::size_t ambient);

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(std::size_t i) const;
    SupportSet complement() const;

    /// v with every coordinate outside the set zeroed (full length kept).
    std::vector<double> restrict_to(const std::vector<double>& v) const;
    /// l1 mass of v on the set / off the set.
    double mass_on(const std::vector<double>& v) const;
    double mass_off(const std::vector<double>& v) const;

    bool operator==(const SupportSet& rhs) const = default;

private:
    std::vector<std::size_t> indices_;
    std::size_t ambient_ = 0;
};

// ---------------------------------------------------------------------------
// Spark

struct SparkReport {
    /// Smallest number of linearly dependent columns; empty when every column
    /// subset is independent (full column rank with n <= d).
    std::optional<std::size_t> spark;
    bool full_spark = false;
    std::vector<std::size_t> witness;  // a smallest dependent subset, if any
};

/// Exact spark by exhaustive subset enumeration in increasing size. Throws
/// NumericError when the enumeration would exceed subset_budget rank checks
/// (use smaller instances).
SparkReport spark(const DenseMatrix& d, double tol = kDefaultRankTol,
                  std::size_t subset_budget = 2000000);

// ---------------------------------------------------------------------------
// Null space property of a matrix

struct NspReport {
    bool holds = false;
    /// max over supports and sign patterns of the LP optimum ||v_T||_1 under
    /// ||v_{T^c}||_1 <= 1; +inf when some kernel vector is supported inside T.
    /// When the check fails the sweep stops at the violating subproblem, so
    /// the value reported is the one that witnessed the failure.
    double worst_ratio = 0.0;
    std::size_t order = 0;
    std::optional<std::vector<double>> witness_v;
    std::optional<SupportSet> witness_t;
};

/// Exact k-NSP decision at tolerance: for every |T| = k and sign pattern the
/// LP maximum of sigma.v_T over ker(M) with ||v_{T^c}||_1 <= 1 must stay
/// below 1 - strict_margin. Supports smaller than k are dominated and not
/// enumerated.
NspReport check_nsp(const DenseMatrix& m, std::size_t k, double tol = kDefaultRankTol,
                    double strict_margin = kDefaultStrictMargin);

// ---------------------------------------------------------------------------
// Dictionary null space property

/// min over u in ker D of ||v_T + u||_1 minus ||v_{T^c}||_1. Negative means
/// the D-NSP inequality holds strictly for this (v, T); >= 0 falsifies it.
/// Preconditions: A D v = 0 within tol and D v != 0 (checked, throws
/// std::invalid_argument otherwise).
double dnsp_margin(const DenseMatrix& a, const DenseMatrix& d, const std::vector<double>& v,
                   const SupportSet& t, double tol = kDefaultRankTol);

/// Certificate that a d x (d+1) dictionary with a one-dimensional kernel is
/// not |T|-admissible: the normalized kernel vector u carries more l1 mass on
/// T than off it, and every off-T coordinate of u is nonzero.
struct Certificate {
    std::vector<double> u;  // normalized kernel vector, canonical sign
    SupportSet t;
    double mass_on_t = 0.0;
    double mass_off_t = 0.0;
    double min_off_support = 0.0;  // min |u_j| over T^c (inf when T^c empty)
};

/// Searches supports of size k, heaviest l1 mass first. Only the
/// one-dimensional-kernel d x (d+1) case is decided; anything else returns
/// nullopt (not applicable).
std::optional<Certificate> inadmissibility_certificate(
    const DenseMatrix& d, std::size_t k, double strict_margin = kDefaultStrictMargin,
    double supp_tol = kDefaultSupportTol, double tol = kDefaultRankTol);

enum class DnspDecision { Holds, Fails, Undecided };
enum class DnspMethod { FullSparkReduction, LemmaCertificate, Falsification, SamplingOnly };

struct DnspOptions {
    double tol = kDefaultRankTol;
    double strict_margin = kDefaultStrictMargin;
    double supp_tol = kDefaultSupportTol;
    /// Total dnsp_margin evaluations granted to the falsification search.
    std::size_t sampling_budget = 10000;
    std::uint64_t seed = 0x6e73706b69740001ULL;
};

struct DnspWitness {
    std::vector<double> v;
    SupportSet t;
    double margin = 0.0;
};

struct DnspReport {
    DnspDecision decision = DnspDecision::Undecided;
    DnspMethod method = DnspMethod::SamplingOnly;
    std::size_t order = 0;
    std::optional<DnspWitness> witness;        // present on Fails when found
    std::optional<Certificate> certificate;    // present on LemmaCertificate
    std::optional<NspReport> nsp_report;       // present on FullSparkReduction
    double worst_margin = 0.0;                 // largest margin seen by the search
    std::size_t margin_evals = 0;
    bool vacuous_kernel = false;               // ker(AD) trivial, Holds by emptiness
    std::string note;
};

struct FalsificationResult {
    std::optional<DnspWitness> witness;
    double worst_margin = 0.0;
    std::size_t margin_evals = 0;
};

/// Best-effort search for a D-NSP violation witness: LP vertices of the NSP
/// subproblems on ker(AD), the constructive candidates of the inadmissibility
/// argument when the dictionary carries a certificate, and seeded random
/// directions, until the evaluation budget runs out. Finding nothing is not a
/// proof that the property holds.
FalsificationResult falsification_search(const DenseMatrix& a, const DenseMatrix& d,
                                         std::size_t k, const DnspOptions& opts = {});

/// Tri-state D-NSP decision. Order of the procedure:
///   1. vacuously Holds when ker(AD) is trivial;
///   2. Fails via the lemma certificate when one exists and m < d;
///   3. exact reduction to check_nsp(AD, k) when D is full spark;
///   4. falsification search (Fails when a witness shows up);
///   5. otherwise Undecided with the observed margin statistics.
DnspReport check_dnsp(const DenseMatrix& a, const DenseMatrix& d, std::size_t k,
                      const DnspOptions& opts = {});

// ---------------------------------------------------------------------------
// Strong null space property constant and the stability constants

enum class SnspMethod {
    NotApplicable,   // D-NSP does not hold (or was undecided): c = 0
    VacuousKernel,   // ker(AD) imposes no constraint: c = +inf
    ExactDim1,       // one-dimensional ker(AD): both signed directions checked
    MeshDim2,        // two-dimensional kernel: circle mesh plus local refinement
    SampleEstimate,  // kernel dimension >= 3: estimate only, not certified
};

struct SnspEstimate {
    double c = 0.0;  // may be +inf for the vacuous case
    SnspMethod method = SnspMethod::NotApplicable;
    std::size_t mesh_points = 0;
    std::string note;
};

/// Largest constant c with ||v_{T^c}||_1 - min_u ||v_T + u||_1 >= c ||Dv||_2
/// over the unit sphere of ker(AD) and all |T| = k. Exact for kernel
/// dimension 1, mesh-certified for dimension 2, sampled otherwise.
SnspEstimate snsp_constant(const DenseMatrix& a, const DenseMatrix& d, std::size_t k,
                           double tol = kDefaultRankTol);

struct StabilityConstants {
    double c1 = 0.0;  // 2 / c
    double c2 = 0.0;  // 2 sqrt(n) / (c nu_a nu_d) + 2 / nu_a
};

/// Constants of the noisy-recovery error bound. All inputs must be positive
/// (c may be +inf, which zeroes its terms); throws std::invalid_argument
/// otherwise.
StabilityConstants stability_constants(double c, double nu_a, double nu_d, std::size_t n);

}  // namespace nspkit
