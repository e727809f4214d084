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

#include "nspkit/properties.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nspkit/combinatorics.hpp"
#include "nspkit/errors.hpp"
#include "nspkit/rng.hpp"
#include "nspkit/simplex.hpp"

namespace nspkit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// SupportSet

SupportSet::SupportSet(std::vector<std::size_t> indices, std::size_t ambient)
    : indices_(std::move(indices)), ambient_(ambient) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw std::invalid_argument("SupportSet: duplicate indices");
    }
    if (!indices_.empty() && indices_.back() >= ambient_) {
        throw std::invalid_argument("SupportSet: index out of range");
    }
}

bool SupportSet::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

SupportSet SupportSet::complement() const {
    std::vector<std::size_t> comp;
    comp.reserve(ambient_ - indices_.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (pos < indices_.size() && indices_[pos] == i) {
            ++pos;
        } else {
            comp.push_back(i);
        }
    }
    return SupportSet(std::move(comp), ambient_);
}

std::vector<double> SupportSet::restrict_to(const std::vector<double>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SupportSet: vector length mismatch");
    std::vector<double> r(v.size(), 0.0);
    for (std::size_t i : indices_) r[i] = v[i];
    return r;
}

double SupportSet::mass_on(const std::vector<double>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SupportSet: vector length mismatch");
    double s = 0.0;
    for (std::size_t i : indices_) s += std::abs(v[i]);
    return s;
}

double SupportSet::mass_off(const std::vector<double>& v) const {
    return norm1(v) - mass_on(v);
}

// ---------------------------------------------------------------------------
// Spark

SparkReport spark(const DenseMatrix& d, double tol, std::size_t subset_budget) {
    const std::size_t rows = d.rows();
    const std::size_t n = d.cols();
    std::size_t examined = 0;

    for (std::size_t s = 1; s <= std::min(n, rows); ++s) {
        std::vector<std::size_t> found;
        const bool completed = for_each_subset(n, s, [&](const std::vector<std::size_t>& subset) {
            if (++examined > subset_budget) {
                throw NumericError(
                    "spark: combinatorial budget exceeded; use smaller instances or raise the cap");
            }
            if (rank(d.columns(subset), tol) < s) {
                found = subset;
                return false;
            }
            return true;
        });
        if (!completed) {
            return {s, false, std::move(found)};
        }
    }
    SparkReport rep;
    rep.full_spark = true;
    if (n > rows) {
        // any d+1 columns of a d-row matrix are dependent
        rep.spark = rows + 1;
        rep.witness.resize(rows + 1);
        for (std::size_t i = 0; i <= rows; ++i) rep.witness[i] = i;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// NSP sweep (shared by check_nsp and the falsification search)

namespace {

struct SweepOutcome {
    bool holds = true;
    double worst_ratio = 0.0;
    std::optional<std::vector<double>> witness_v;
    std::optional<SupportSet> witness_t;
    // LP optimizers per (T, sign pattern), kept when collect is on
    std::vector<std::pair<std::vector<double>, SupportSet>> vertices;
};

// For every |T| = k and sign pattern, maximize sigma.v_T over v in the span
// of kb with ||v_{T^c}||_1 <= 1. A kernel direction of the T^c rows makes the
// subproblem unbounded (the property fails outright for that T).
SweepOutcome nsp_sweep(const KernelBasis& kb, std::size_t k, double tol, double strict_margin,
                       bool collect) {
    SweepOutcome out;
    const std::size_t n = kb.ambient_dim;
    const std::size_t p = kb.count();
    if (p == 0) return out;

    const DenseMatrix& basis = kb.basis;
    bool done = false;

    for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
        SupportSet t(t_raw, n);
        const SupportSet tc = t.complement();
        const std::size_t q = tc.size();

        DenseMatrix rows_tc(q, p);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t l = 0; l < p; ++l) rows_tc(a, l) = basis(tc.indices()[a], l);

        const KernelBasis free_dirs = kernel_basis(rows_tc, tol);
        if (free_dirs.count() > 0) {
            // some kernel vector is supported inside T: ratio is unbounded
            std::vector<double> v = basis * free_dirs.vector(0);
            out.holds = false;
            out.worst_ratio = kInf;
            if (!out.witness_v) {
                out.witness_v = v;
                out.witness_t = t;
            }
            if (collect) out.vertices.emplace_back(std::move(v), t);
            if (!collect) {
                done = true;
                return false;
            }
            return true;
        }

        // shared constraint block for this T
        const std::size_t nv = 2 * p + 3 * q + 1;
        LinearProgram lp;
        lp.equalities = DenseMatrix(2 * q + 1, nv);
        lp.rhs.assign(2 * q + 1, 0.0);
        for (std::size_t a = 0; a < q; ++a) {
            const std::size_t j = tc.indices()[a];
            for (std::size_t l = 0; l < p; ++l) {
                lp.equalities(a, l) = -basis(j, l);
                lp.equalities(a, p + l) = basis(j, l);
                lp.equalities(q + a, l) = basis(j, l);
                lp.equalities(q + a, p + l) = -basis(j, l);
            }
            lp.equalities(a, 2 * p + a) = 1.0;
            lp.equalities(q + a, 2 * p + a) = 1.0;
            lp.equalities(a, 2 * p + q + a) = -1.0;
            lp.equalities(q + a, 2 * p + 2 * q + a) = -1.0;
            lp.equalities(2 * q, 2 * p + a) = 1.0;
        }
        lp.equalities(2 * q, nv - 1) = 1.0;
        lp.rhs[2 * q] = 1.0;
        lp.objective.assign(nv, 0.0);

        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            for (std::size_t l = 0; l < p; ++l) {
                double g = 0.0;
                for (std::size_t ii = 0; ii < k; ++ii) {
                    const double sigma = (mask >> ii) & 1 ? 1.0 : -1.0;
                    g += sigma * basis(t.indices()[ii], l);
                }
                lp.objective[l] = -g;
                lp.objective[p + l] = g;
            }
            const LpSolution sol = solve_lp(lp);
            if (sol.status == LpStatus::Unbounded) {
                out.holds = false;
                out.worst_ratio = kInf;
                continue;
            }
            if (sol.status != LpStatus::Optimal) {
                throw NumericError("check_nsp: subproblem LP failed to reach Optimal");
            }
            const double ratio = -sol.objective_value;
            out.worst_ratio = std::max(out.worst_ratio, ratio);
            std::vector<double> w(p);
            for (std::size_t l = 0; l < p; ++l) w[l] = sol.x[l] - sol.x[p + l];
            std::vector<double> v = basis * w;
            if (ratio >= 1.0 - strict_margin) {
                out.holds = false;
                if (!out.witness_v) {
                    out.witness_v = v;
                    out.witness_t = t;
                }
                if (!collect) {
                    done = true;
                    return false;
                }
            }
            if (collect) out.vertices.emplace_back(std::move(v), t);
        }
        return !done;
    });
    return out;
}

}  // namespace

NspReport check_nsp(const DenseMatrix& m, std::size_t k, double tol, double strict_margin) {
    if (k < 1 || k > m.cols()) throw std::invalid_argument("check_nsp: need 1 <= k <= cols");
    const KernelBasis kb = kernel_basis(m, tol);
    const SweepOutcome out = nsp_sweep(kb, k, tol, strict_margin, /*collect=*/false);
    NspReport rep;
    rep.holds = out.holds;
    rep.worst_ratio = out.worst_ratio;
    rep.order = k;
    rep.witness_v = out.witness_v;
    rep.witness_t = out.witness_t;
    return rep;
}

// ---------------------------------------------------------------------------
// D-NSP margin

namespace {

/// min over u in the given kernel of ||c0 + u||_1: closed forms for kernel
/// dimension 0 and 1, the LP encoding otherwise.
double quotient_l1(const std::vector<double>& c0, const KernelBasis& ker) {
    switch (ker.count()) {
        case 0:
            return norm1(c0);
        case 1:
            return min_l1_along_line(c0, ker.vector(0));
        default:
            return min_l1_affine(c0, ker.basis).min_value;
    }
}

}  // namespace

double dnsp_margin(const DenseMatrix& a, const DenseMatrix& d, const std::vector<double>& v,
                   const SupportSet& t, double tol) {
    if (a.cols() != d.rows()) throw std::invalid_argument("dnsp_margin: A and D are incompatible");
    if (v.size() != d.cols() || t.ambient() != d.cols()) {
        throw std::invalid_argument("dnsp_margin: v / T must live in coefficient space");
    }
    const std::vector<double> dv = d * v;
    const double scale = d.frobenius_norm() * norm2(v);
    if (norm2(dv) <= tol * scale) {
        throw std::invalid_argument("dnsp_margin: D v vanishes (precondition D v != 0)");
    }
    const std::vector<double> adv = a * dv;
    if (norm2(adv) > tol * a.frobenius_norm() * d.frobenius_norm() * norm2(v)) {
        throw std::invalid_argument("dnsp_margin: D v is not in ker A at the given tolerance");
    }
    const KernelBasis ker_d = kernel_basis(d, tol);
    return quotient_l1(t.restrict_to(v), ker_d) - t.mass_off(v);
}

// ---------------------------------------------------------------------------
// Inadmissibility certificate

std::optional<Certificate> inadmissibility_certificate(const DenseMatrix& d, std::size_t k,
                                                       double strict_margin, double supp_tol,
                                                       double tol) {
    if (k < 2) return std::nullopt;
    const std::size_t n = d.cols();
    if (n != d.rows() + 1 || k > n) return std::nullopt;
    const KernelBasis kb = kernel_basis(d, tol);
    if (kb.count() != 1) return std::nullopt;

    std::vector<double> u = kb.vector(0);
    // canonical sign: the first coordinate of largest magnitude is positive
    std::size_t peak = 0;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (std::abs(u[i]) > std::abs(u[peak])) peak = i;
    }
    if (u[peak] < 0.0) {
        for (auto& x : u) x = -x;
    }

    std::vector<std::vector<std::size_t>> supports;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
        supports.push_back(t_raw);
        return true;
    });
    // heaviest l1 mass first, lexicographic among ties
    std::stable_sort(supports.begin(), supports.end(),
                     [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
                         double mx = 0.0, my = 0.0;
                         for (std::size_t i : x) mx += std::abs(u[i]);
                         for (std::size_t i : y) my += std::abs(u[i]);
                         return mx > my;
                     });

    const double total = norm1(u);
    for (const auto& t_raw : supports) {
        SupportSet t(t_raw, n);
        const double on = t.mass_on(u);
        const double off = total - on;
        if (on <= off + strict_margin) continue;
        double min_off = kInf;
        for (std::size_t j : t.complement().indices()) min_off = std::min(min_off, std::abs(u[j]));
        if (min_off <= supp_tol) continue;
        Certificate cert;
        cert.u = u;
        cert.t = t;
        cert.mass_on_t = on;
        cert.mass_off_t = off;
        cert.min_off_support = min_off;
        return cert;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Falsification search

namespace {

struct DnspWorkspace {
    const DenseMatrix& a;
    const DenseMatrix& d;
    DenseMatrix ad;
    KernelBasis ker_ad;
    KernelBasis ker_d;
    double d_fro = 0.0;
};

DnspWorkspace make_workspace(const DenseMatrix& a, const DenseMatrix& d, double tol) {
    DnspWorkspace ws{a, d, a * d, {}, {}, d.frobenius_norm()};
    ws.ker_ad = kernel_basis(ws.ad, tol);
    ws.ker_d = kernel_basis(d, tol);
    return ws;
}

FalsificationResult falsify(const DnspWorkspace& ws, std::size_t k, const DnspOptions& opts,
                            const std::optional<Certificate>& cert_in) {
    FalsificationResult res;
    res.worst_margin = -kInf;
    const std::size_t n = ws.d.cols();
    const std::size_t p = ws.ker_ad.count();
    if (p == 0) return res;

    // margin of a unit-normalized candidate; margins are 1-homogeneous, so
    // normalization changes nothing but the conditioning
    auto eval = [&](std::vector<double> v, const SupportSet& t) -> bool {
        const double nv = norm2(v);
        if (nv <= 0.0) return false;
        for (auto& x : v) x /= nv;
        if (norm2(ws.d * v) <= opts.tol * ws.d_fro) return false;  // inside ker D
        if (res.margin_evals >= opts.sampling_budget) return false;
        ++res.margin_evals;
        const double margin = quotient_l1(t.restrict_to(v), ws.ker_d) - t.mass_off(v);
        res.worst_margin = std::max(res.worst_margin, margin);
        if (margin >= -opts.strict_margin) {
            res.witness = DnspWitness{std::move(v), t, margin};
            return true;
        }
        return false;
    };
    auto budget_left = [&] { return res.margin_evals < opts.sampling_budget; };

    // Stage 1: constructive candidates from the inadmissibility argument.
    // For any v0 with D v0 in ker A \ {0}, one of +-v0 + alpha u violates the
    // property on the certificate's support.
    std::optional<Certificate> cert = cert_in;
    if (!cert && n == ws.d.rows() + 1 && ws.ker_d.count() == 1) {
        cert = inadmissibility_certificate(ws.d, k, opts.strict_margin, opts.supp_tol, opts.tol);
    }
    if (cert && budget_left()) {
        const KernelBasis ker_a = kernel_basis(ws.a, opts.tol);
        if (ker_a.count() > 0 && ws.ker_d.count() == 1) {
            try {
                const DenseMatrix pinv = right_pseudoinverse(ws.d);
                const std::vector<double>& u = cert->u;
                for (std::size_t j = 0; j < ker_a.count() && budget_left(); ++j) {
                    const std::vector<double> v0 = pinv * ker_a.vector(j);
                    if (eval(v0, cert->t)) return res;
                    if (std::isfinite(cert->min_off_support) && cert->min_off_support > 0.0) {
                        const double alpha = 2.0 * norm_inf(v0) / cert->min_off_support;
                        if (eval(add(v0, scaled(u, alpha)), cert->t)) return res;
                        if (eval(add(scaled(v0, -1.0), scaled(u, alpha)), cert->t)) return res;
                    }
                }
            } catch (const NumericError&) {
                // rank-deficient D: skip the constructive stage
            }
        }
    }

    // Stage 2: LP vertices of the NSP subproblems on ker(AD), first against
    // the support that generated them, then across all other supports.
    const SweepOutcome sweep = nsp_sweep(ws.ker_ad, k, opts.tol, opts.strict_margin, /*collect=*/true);
    for (const auto& [v, t] : sweep.vertices) {
        if (!budget_left()) break;
        if (eval(v, t)) return res;
    }
    for (const auto& [v, t_own] : sweep.vertices) {
        if (!budget_left()) break;
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
            SupportSet t(t_raw, n);
            if (t == t_own) return true;
            if (eval(v, t)) {
                found = true;
                return false;
            }
            return budget_left();
        });
        if (found) return res;
    }

    // Stage 3: seeded random directions in ker(AD), each against all supports.
    Rng rng(opts.seed);
    while (budget_left()) {
        const std::vector<double> v = ws.ker_ad.basis * rng.unit_vector(p);
        bool found = false;
        for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
            if (eval(v, SupportSet(t_raw, n))) {
                found = true;
                return false;
            }
            return budget_left();
        });
        if (found) return res;
    }
    return res;
}

}  // namespace

FalsificationResult falsification_search(const DenseMatrix& a, const DenseMatrix& d, std::size_t k,
                                         const DnspOptions& opts) {
    if (a.cols() != d.rows()) throw std::invalid_argument("falsification_search: A, D incompatible");
    if (k < 1 || k > d.cols()) throw std::invalid_argument("falsification_search: bad order k");
    const DnspWorkspace ws = make_workspace(a, d, opts.tol);
    return falsify(ws, k, opts, std::nullopt);
}

// ---------------------------------------------------------------------------
// D-NSP decision

DnspReport check_dnsp(const DenseMatrix& a, const DenseMatrix& d, std::size_t k,
                      const DnspOptions& opts) {
    if (a.cols() != d.rows()) throw std::invalid_argument("check_dnsp: A and D are incompatible");
    if (k < 1 || k > d.cols()) throw std::invalid_argument("check_dnsp: need 1 <= k <= cols(D)");

    DnspReport rep;
    rep.order = k;
    const DnspWorkspace ws = make_workspace(a, d, opts.tol);
    const SparkReport sp = spark(d, opts.tol);

    if (ws.ker_ad.count() == 0) {
        rep.decision = DnspDecision::Holds;
        rep.method = sp.full_spark ? DnspMethod::FullSparkReduction : DnspMethod::SamplingOnly;
        rep.vacuous_kernel = true;
        rep.nsp_report = NspReport{true, 0.0, k, std::nullopt, std::nullopt};
        rep.note = "ker(AD) is trivial; the property holds vacuously";
        return rep;
    }

    if (a.rows() < d.rows()) {
        auto cert = inadmissibility_certificate(d, k, opts.strict_margin, opts.supp_tol, opts.tol);
        if (cert) {
            rep.decision = DnspDecision::Fails;
            rep.method = DnspMethod::LemmaCertificate;
            rep.certificate = cert;
            FalsificationResult f = falsify(ws, k, opts, cert);
            rep.witness = std::move(f.witness);
            rep.worst_margin = f.worst_margin;
            rep.margin_evals = f.margin_evals;
            return rep;
        }
    }

    if (sp.full_spark) {
        const SweepOutcome out = nsp_sweep(ws.ker_ad, k, opts.tol, opts.strict_margin, false);
        NspReport nsp{out.holds, out.worst_ratio, k, out.witness_v, out.witness_t};
        rep.method = DnspMethod::FullSparkReduction;
        rep.nsp_report = std::move(nsp);
        if (out.holds) {
            rep.decision = DnspDecision::Holds;
        } else {
            rep.decision = DnspDecision::Fails;
            FalsificationResult f = falsify(ws, k, opts, std::nullopt);
            rep.witness = std::move(f.witness);
            rep.worst_margin = f.worst_margin;
            rep.margin_evals = f.margin_evals;
            if (!rep.witness) rep.note = "decision by full-spark reduction; no search witness in budget";
        }
        return rep;
    }

    FalsificationResult f = falsify(ws, k, opts, std::nullopt);
    rep.worst_margin = f.worst_margin;
    rep.margin_evals = f.margin_evals;
    if (f.witness) {
        rep.decision = DnspDecision::Fails;
        rep.method = DnspMethod::Falsification;
        rep.witness = std::move(f.witness);
    } else {
        rep.decision = DnspDecision::Undecided;
        rep.method = DnspMethod::SamplingOnly;
        rep.note = "no violation found within the sampling budget; not a proof";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// SNSP constant

namespace {

/// f(v) = min over |T| = k of (||v_{T^c}||_1 - quotient(v_T)) / ||Dv||_2,
/// or nullopt when Dv vanishes at tolerance (no constraint from v).
std::optional<double> snsp_objective(const DnspWorkspace& ws, const std::vector<double>& v,
                                     std::size_t k, double tol) {
    const double dv_norm = norm2(ws.d * v);
    if (dv_norm <= tol * ws.d_fro * norm2(v)) return std::nullopt;
    const std::size_t n = v.size();
    double best = kInf;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& t_raw) {
        SupportSet t(t_raw, n);
        const double value = (t.mass_off(v) - quotient_l1(t.restrict_to(v), ws.ker_d)) / dv_norm;
        best = std::min(best, value);
        return true;
    });
    return best;
}

}  // namespace

SnspEstimate snsp_constant(const DenseMatrix& a, const DenseMatrix& d, std::size_t k, double tol) {
    SnspEstimate est;
    DnspOptions opts;
    opts.tol = tol;
    const DnspReport dnsp = check_dnsp(a, d, k, opts);
    if (dnsp.decision != DnspDecision::Holds) {
        est.c = 0.0;
        est.method = SnspMethod::NotApplicable;
        est.note = dnsp.decision == DnspDecision::Fails
                       ? "D-NSP fails, no positive constant exists"
                       : "D-NSP undecided, no constant certified";
        return est;
    }

    const DnspWorkspace ws = make_workspace(a, d, tol);
    const std::size_t p = ws.ker_ad.count();
    if (p == 0) {
        est.c = kInf;
        est.method = SnspMethod::VacuousKernel;
        est.note = "ker(AD) trivial, the defining inequality is vacuous";
        return est;
    }

    if (p == 1) {
        const std::vector<double> v = ws.ker_ad.vector(0);
        const auto f_pos = snsp_objective(ws, v, k, tol);
        const auto f_neg = snsp_objective(ws, scaled(v, -1.0), k, tol);
        if (!f_pos && !f_neg) {
            est.c = kInf;
            est.method = SnspMethod::VacuousKernel;
            est.note = "ker(AD) coincides with ker D, no constraint";
            return est;
        }
        est.c = std::min(f_pos.value_or(kInf), f_neg.value_or(kInf));
        est.method = SnspMethod::ExactDim1;
        est.note = "one-dimensional kernel, both signed directions evaluated";
        return est;
    }

    if (p == 2) {
        const std::size_t mesh = 10000;
        est.mesh_points = mesh;
        const double step = 3.14159265358979323846 / static_cast<double>(mesh);
        double best = kInf;
        double best_theta = 0.0;
        auto eval_theta = [&](double theta) {
            std::vector<double> w = {std::cos(theta), std::sin(theta)};
            const auto f = snsp_objective(ws, ws.ker_ad.basis * w, k, tol);
            if (f && *f < best) {
                best = *f;
                best_theta = theta;
            }
        };
        for (std::size_t i = 0; i < mesh; ++i) eval_theta(static_cast<double>(i) * step);
        // local refinement around the coarse argmin
        double half = step;
        for (int level = 0; level < 3; ++level) {
            const double lo = best_theta - half;
            const double h = 2.0 * half / 200.0;
            for (int i = 0; i <= 200; ++i) eval_theta(lo + h * static_cast<double>(i));
            half = h;
        }
        if (!std::isfinite(best)) {
            est.c = kInf;
            est.method = SnspMethod::VacuousKernel;
            est.note = "every mesh direction fell inside ker D";
            return est;
        }
        est.c = best;
        est.method = SnspMethod::MeshDim2;
        est.note = "circle mesh with local refinement";
        return est;
    }

    // kernel dimension >= 3: estimate only
    const std::size_t samples = 4096;
    double best = kInf;
    const SweepOutcome sweep = nsp_sweep(ws.ker_ad, k, tol, kDefaultStrictMargin, /*collect=*/true);
    for (const auto& [v, t] : sweep.vertices) {
        const auto f = snsp_objective(ws, v, k, tol);
        if (f) best = std::min(best, *f);
    }
    Rng rng(0x6e73706b69740002ULL);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto f = snsp_objective(ws, ws.ker_ad.basis * rng.unit_vector(p), k, tol);
        if (f) best = std::min(best, *f);
    }
    if (!std::isfinite(best)) {
        est.c = kInf;
        est.method = SnspMethod::VacuousKernel;
        est.note = "no sampled direction left ker D";
        return est;
    }
    est.c = best;
    est.method = SnspMethod::SampleEstimate;
    est.mesh_points = samples;
    est.note = "sampled lower-envelope estimate, not certified for kernel dimension >= 3";
    return est;
}

StabilityConstants stability_constants(double c, double nu_a, double nu_d, std::size_t n) {
    if (!(c > 0.0) || std::isnan(c)) throw std::invalid_argument("stability_constants: c must be positive");
    if (!std::isfinite(nu_a) || nu_a <= 0.0) throw std::invalid_argument("stability_constants: nu_a must be positive");
    if (!std::isfinite(nu_d) || nu_d <= 0.0) throw std::invalid_argument("stability_constants: nu_d must be positive");
    if (n == 0) throw std::invalid_argument("stability_constants: n must be >= 1");
    StabilityConstants sc;
    sc.c1 = 2.0 / c;
    sc.c2 = 2.0 * std::sqrt(static_cast<double>(n)) / (c * nu_a * nu_d) + 2.0 / nu_a;
    return sc;
}

}  // namespace nspkit
