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

#include "nspkit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "nspkit/dictionary.hpp"
#include "nspkit/errors.hpp"
#include "nspkit/linalg.hpp"
#include "nspkit/recovery.hpp"
#include "nspkit/report_json.hpp"
#include "nspkit/rng.hpp"

namespace nspkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Config plumbing

void validate_config(const ExperimentConfig& config) {
    if (config.d_min < 2 || config.d_max > 8 || config.d_min > config.d_max) {
        throw std::invalid_argument("config: need 2 <= d_min <= d_max <= 8");
    }
    if (config.d_max + config.n_extra_max > 12) {
        throw std::invalid_argument("config: d_max + n_extra_max must stay <= 12 (desk scale)");
    }
    if (config.instances > 10000 || config.trials > 10000 || config.dictionaries > 10000 ||
        config.sensing_draws > 10000) {
        throw std::invalid_argument("config: instance counts are capped at 1e4 (desk scale)");
    }
    if (config.n_extra_max < 1) {
        throw std::invalid_argument("config: n_extra_max must be >= 1 (the pool includes repeats)");
    }
    if (config.k_values.empty()) throw std::invalid_argument("config: k_values must be nonempty");
    for (std::size_t k : config.k_values) {
        if (k < 1 || k > 12) throw std::invalid_argument("config: k out of range");
    }
    if (config.tol <= 0.0 || config.strict_margin <= 0.0) {
        throw std::invalid_argument("config: tolerances must be positive");
    }
    if (config.radius <= 0.0 || config.radius >= 1.0) {
        throw std::invalid_argument("config: radius must be in (0, 1)");
    }
    for (double eps : config.noise_levels) {
        if (eps < 0.0 || !std::isfinite(eps)) throw std::invalid_argument("config: bad noise level");
    }
}

json config_to_json(const ExperimentConfig& c) {
    return json{{"name", c.name},
                {"seed", c.seed},
                {"instances", c.instances},
                {"d_min", c.d_min},
                {"d_max", c.d_max},
                {"n_extra_max", c.n_extra_max},
                {"k_values", c.k_values},
                {"tol", c.tol},
                {"strict_margin", c.strict_margin},
                {"sampling_budget", c.sampling_budget},
                {"coefficient_draws", c.coefficient_draws},
                {"success_tol", c.success_tol},
                {"recovery_trials", c.recovery_trials},
                {"dictionaries", c.dictionaries},
                {"sensing_draws", c.sensing_draws},
                {"radius", c.radius},
                {"trials", c.trials},
                {"noise_levels", c.noise_levels},
                {"denoise_iter_cap", c.denoise_iter_cap}};
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig c;
    if (!j.contains("seed")) throw std::invalid_argument("config: seed is mandatory");
    c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    auto opt = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    opt("instances", c.instances);
    opt("d_min", c.d_min);
    opt("d_max", c.d_max);
    opt("n_extra_max", c.n_extra_max);
    opt("k_values", c.k_values);
    opt("tol", c.tol);
    opt("strict_margin", c.strict_margin);
    opt("sampling_budget", c.sampling_budget);
    opt("coefficient_draws", c.coefficient_draws);
    opt("success_tol", c.success_tol);
    opt("recovery_trials", c.recovery_trials);
    opt("dictionaries", c.dictionaries);
    opt("sensing_draws", c.sensing_draws);
    opt("radius", c.radius);
    opt("trials", c.trials);
    opt("noise_levels", c.noise_levels);
    opt("denoise_iter_cap", c.denoise_iter_cap);
    opt("out_path", c.out_path);
    validate_config(c);
    return c;
}

json ExperimentReport::to_json() const {
    return json{{"schema_version", 1},
                {"experiment", name},
                {"config", config},
                {"aggregate",
                 json{{"records", records.size()},
                      {"agreements", agreements},
                      {"undecided", undecided},
                      {"violations", violations.size()},
                      {"errors", errors.size()},
                      {"passed", passed()}}},
                {"records", records},
                {"violations", violations},
                {"errors", errors},
                {"wall_seconds", wall_seconds}};
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

DenseMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
    return m;
}

std::size_t draw_in(Rng& rng, std::size_t lo, std::size_t hi) {
    return lo + rng.uniform_index(hi - lo + 1);
}

/// Rotating pool of dictionary families for the mixed-instance sweeps.
Dictionary draw_mixed_dictionary(Rng& rng, std::size_t which, std::size_t d,
                                 std::size_t n_extra_max, double radius) {
    switch (which % 5) {
        case 0:
            return identity_dictionary(d);
        case 1:
            return gaussian_dictionary(d, draw_in(rng, d, d + n_extra_max), rng.next_u64());
        case 2:
            return harmonic_frame(d, draw_in(rng, d, d + n_extra_max));
        case 3:
            return perturbed_basis_dictionary(d, radius, rng.next_u64());
        default: {
            const std::size_t n0 = draw_in(rng, d, d + n_extra_max - 1);
            const std::size_t room = d + n_extra_max - n0;
            const std::size_t copies = 1 + rng.uniform_index(std::min<std::size_t>(2, room));
            std::vector<std::size_t> index_set;
            for (std::size_t c = 0; c < copies; ++c) index_set.push_back(rng.uniform_index(n0));
            std::sort(index_set.begin(), index_set.end());
            index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());
            return repeat_columns(gaussian_dictionary(d, n0, rng.next_u64()), index_set);
        }
    }
}

/// Signals built from a falsification witness: the proof of the equivalence
/// theorem shows x0 = D v_T is unrecoverable when (v, T) violates the
/// property, so the oracle tries exactly those first.
void add_witness_signals(const DnspReport& rep, OracleOptions& opts) {
    if (rep.witness) {
        const auto& w = *rep.witness;
        opts.extra_signals.emplace_back(w.t, w.t.restrict_to(w.v));
        opts.extra_signals.emplace_back(w.t, scaled(w.t.restrict_to(w.v), -1.0));
    }
    if (rep.nsp_report && rep.nsp_report->witness_v && rep.nsp_report->witness_t) {
        const auto& t = *rep.nsp_report->witness_t;
        opts.extra_signals.emplace_back(t, t.restrict_to(*rep.nsp_report->witness_v));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Theorem-1 equivalence: check_dnsp vs the brute-force recovery oracle

ExperimentReport experiment_equivalence(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "equivalence";
    report.config = config_to_json(config);

    for (std::size_t i = 0; i < config.instances; ++i) {
        Rng rng(child_seed(config.seed, i));
        try {
            const std::size_t d = draw_in(rng, config.d_min, config.d_max);
            const Dictionary dict = draw_mixed_dictionary(rng, i, d, config.n_extra_max, config.radius);
            const std::size_t n = dict.size();
            const std::size_t m = draw_in(rng, 1, d - 1);
            std::size_t k = config.k_values[rng.uniform_index(config.k_values.size())];
            k = std::min(k, n);
            const DenseMatrix a = gaussian_matrix(rng, m, d);

            DnspOptions opts;
            opts.tol = config.tol;
            opts.strict_margin = config.strict_margin;
            opts.sampling_budget = config.sampling_budget;
            opts.seed = rng.next_u64();
            const DnspReport rep = check_dnsp(a, dict.matrix, k, opts);

            OracleOptions oracle_opts;
            oracle_opts.coefficient_draws = config.coefficient_draws;
            oracle_opts.success_tol = config.success_tol;
            oracle_opts.seed = rng.next_u64();
            if (rep.decision == DnspDecision::Fails) add_witness_signals(rep, oracle_opts);
            const OracleVerdict verdict = brute_force_recovery_oracle(a, dict.matrix, k, oracle_opts);

            json record{{"instance", i},
                        {"family", family_name(dict.family)},
                        {"d", d},
                        {"n", n},
                        {"m", m},
                        {"k", k},
                        {"decision", to_string(rep.decision)},
                        {"method", to_string(rep.method)},
                        {"margin_evals", rep.margin_evals},
                        {"oracle_success", verdict.success},
                        {"oracle_trials", verdict.trials}};

            if (rep.decision == DnspDecision::Undecided) {
                ++report.undecided;
                record["classification"] = "undecided";
            } else {
                const bool agree = (rep.decision == DnspDecision::Holds) == verdict.success;
                if (agree) {
                    ++report.agreements;
                    record["classification"] = "agreement";
                } else {
                    record["classification"] = "violation";
                    json v = record;
                    v["dnsp"] = to_json(rep);
                    if (verdict.failure) {
                        v["oracle_failure"] = json{{"support", to_json(verdict.failure->support)},
                                                   {"z0", verdict.failure->z0},
                                                   {"signal_error", json_number(verdict.failure->signal_error)},
                                                   {"spread", json_number(verdict.failure->spread)}};
                    }
                    report.violations.push_back(std::move(v));
                }
            }
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"instance", i}, {"error", e.what()}});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Theorem-4 equivalence on full-spark dictionaries

ExperimentReport experiment_fullspark_equivalence(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "fullspark-equivalence";
    report.config = config_to_json(config);

    for (std::size_t i = 0; i < config.instances; ++i) {
        Rng rng(child_seed(config.seed, i));
        try {
            const std::size_t d = draw_in(rng, config.d_min, config.d_max);
            Dictionary dict = identity_dictionary(d);
            bool have = false;
            for (int attempt = 0; attempt < 20 && !have; ++attempt) {
                switch ((i + static_cast<std::size_t>(attempt)) % 3) {
                    case 0:
                        dict = gaussian_dictionary(d, draw_in(rng, d, d + config.n_extra_max),
                                                   rng.next_u64());
                        break;
                    case 1:
                        dict = harmonic_frame(d, draw_in(rng, d, d + config.n_extra_max));
                        break;
                    default:
                        dict = perturbed_basis_dictionary(d, config.radius, rng.next_u64());
                        break;
                }
                have = dict.spark_report.full_spark;
            }
            if (!have) {
                report.errors.push_back(json{{"instance", i}, {"error", "no full-spark draw in 20 tries"}});
                continue;
            }
            const std::size_t n = dict.size();
            const std::size_t m = draw_in(rng, 1, d - 1);
            std::size_t k = config.k_values[rng.uniform_index(config.k_values.size())];
            k = std::min(k, n);
            const DenseMatrix a = gaussian_matrix(rng, m, d);
            const DenseMatrix ad = a * dict.matrix;

            const NspReport nsp = check_nsp(ad, k, config.tol, config.strict_margin);

            DnspOptions opts;
            opts.tol = config.tol;
            opts.strict_margin = config.strict_margin;
            opts.sampling_budget = config.sampling_budget;
            opts.seed = rng.next_u64();
            const FalsificationResult fals = falsification_search(a, dict.matrix, k, opts);

            json record{{"instance", i},
                        {"family", family_name(dict.family)},
                        {"d", d},
                        {"n", n},
                        {"m", m},
                        {"k", k},
                        {"nsp_holds", nsp.holds},
                        {"falsification_witness", fals.witness.has_value()},
                        {"margin_evals", fals.margin_evals}};

            bool ok = nsp.holds == !fals.witness.has_value();
            if (!ok) {
                json v = record;
                v["kind"] = "nsp-vs-falsification";
                v["nsp"] = to_json(nsp);
                report.violations.push_back(std::move(v));
            }

            if (nsp.holds) {
                double worst_coeff_err = 0.0;
                for (std::size_t t = 0; t < config.recovery_trials; ++t) {
                    std::vector<std::size_t> support;
                    {
                        std::vector<std::size_t> all(n);
                        for (std::size_t j = 0; j < n; ++j) all[j] = j;
                        for (std::size_t j = 0; j < k; ++j) {
                            std::swap(all[j], all[j + rng.uniform_index(n - j)]);
                            support.push_back(all[j]);
                        }
                    }
                    std::vector<double> z0(n, 0.0);
                    for (std::size_t idx : support) z0[idx] = t == 0 ? 1.0 : rng.normal();
                    RecoveryProblem prob{a, dict.matrix, ad * z0, 0.0};
                    const RecoveryResult res = l1_synthesis_exact(prob);
                    const double err = norm2(sub(res.z_hat, z0));
                    worst_coeff_err = std::max(worst_coeff_err, err);
                    if (err > config.success_tol) {
                        ok = false;
                        json v = record;
                        v["kind"] = "coefficient-recovery";
                        v["coefficient_error"] = json_number(err);
                        v["z0"] = z0;
                        report.violations.push_back(std::move(v));
                        break;
                    }
                }
                record["worst_coefficient_error"] = json_number(worst_coeff_err);

                const SnspEstimate snsp = snsp_constant(a, dict.matrix, k, config.tol);
                record["snsp_c"] = json_number(snsp.c);
                record["snsp_method"] = to_string(snsp.method);
                if (!(snsp.c > 0.0)) {
                    ok = false;
                    json v = record;
                    v["kind"] = "snsp-not-positive";
                    v["snsp"] = to_json(snsp);
                    report.violations.push_back(std::move(v));
                }
            }

            if (ok) ++report.agreements;
            record["classification"] = ok ? "agreement" : "violation";
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"instance", i}, {"error", e.what()}});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Theorem-3 inadmissibility of perturbed bases

ExperimentReport experiment_inadmissible(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "inadmissible";
    report.config = config_to_json(config);

    const std::size_t d_hi = std::min<std::size_t>(config.d_max, 5);
    for (std::size_t i = 0; i < config.dictionaries; ++i) {
        Rng rng(child_seed(config.seed, i));
        try {
            const std::size_t d = draw_in(rng, config.d_min, d_hi);
            const Dictionary dict = perturbed_basis_dictionary(d, config.radius, rng.next_u64());

            json record{{"dictionary", i},
                        {"d", d},
                        {"certificate", dict.certificate.has_value()}};
            bool ok = true;
            if (!dict.certificate) {
                ok = false;
                report.violations.push_back(json{{"dictionary", i}, {"kind", "missing-certificate"}});
            }

            // perfectly-correlated control [Phi, phi_1]: no certificate exists
            {
                DenseMatrix control(d, d + 1);
                for (std::size_t r = 0; r < d; ++r) {
                    for (std::size_t c = 0; c < d; ++c) control(r, c) = dict.matrix(r, c);
                    control(r, d) = dict.matrix(r, 0);
                }
                const auto control_cert = inadmissibility_certificate(control, 2);
                record["control_certificate"] = control_cert.has_value();
                if (control_cert) {
                    ok = false;
                    report.violations.push_back(
                        json{{"dictionary", i}, {"kind", "control-group-certificate"}});
                }
            }

            std::size_t fails = 0, witnesses = 0;
            for (std::size_t j = 0; j < config.sensing_draws; ++j) {
                const std::size_t m = 1 + j % (d - 1);  // sweep m = 1..d-1
                const DenseMatrix a = gaussian_matrix(rng, m, d);
                DnspOptions opts;
                opts.tol = config.tol;
                opts.strict_margin = config.strict_margin;
                opts.sampling_budget = config.sampling_budget;
                opts.seed = rng.next_u64();
                const DnspReport rep = check_dnsp(a, dict.matrix, 2, opts);
                if (rep.decision == DnspDecision::Fails) {
                    ++fails;
                    if (rep.witness) ++witnesses;
                } else {
                    ok = false;
                    json v{{"dictionary", i},
                           {"sensing_draw", j},
                           {"m", m},
                           {"kind", "not-fails"},
                           {"dnsp", to_json(rep)}};
                    report.violations.push_back(std::move(v));
                }
            }
            record["fails"] = fails;
            record["witnesses"] = witnesses;
            record["sensing_draws"] = config.sensing_draws;
            if (ok) ++report.agreements;
            record["classification"] = ok ? "agreement" : "violation";
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"dictionary", i}, {"error", e.what()}});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Proposition 1: repeated columns do not change the decision

ExperimentReport experiment_repeat_invariance(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "repeat-invariance";
    report.config = config_to_json(config);

    for (std::size_t i = 0; i < config.instances; ++i) {
        Rng rng(child_seed(config.seed, i));
        try {
            const std::size_t d = draw_in(rng, config.d_min, config.d_max);
            Dictionary base = identity_dictionary(d);
            switch (i % 3) {
                case 0:
                    base = gaussian_dictionary(d, draw_in(rng, d, d + std::min<std::size_t>(2, config.n_extra_max)), rng.next_u64());
                    break;
                case 1:
                    base = identity_dictionary(d);
                    break;
                default:
                    base = harmonic_frame(d, draw_in(rng, d, d + std::min<std::size_t>(2, config.n_extra_max)));
                    break;
            }
            const std::size_t n0 = base.size();
            const std::size_t max_copies = std::min<std::size_t>(2, 12 - n0);
            const std::size_t copies = rng.uniform_index(max_copies + 1);  // may be zero
            std::vector<std::size_t> index_set;
            for (std::size_t c = 0; c < copies; ++c) index_set.push_back(rng.uniform_index(n0));
            std::sort(index_set.begin(), index_set.end());
            index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());
            const Dictionary tilde = repeat_columns(base, index_set);

            const std::size_t m = draw_in(rng, 1, d - 1);
            std::size_t k = config.k_values[rng.uniform_index(config.k_values.size())];
            k = std::min(k, base.size());
            const DenseMatrix a = gaussian_matrix(rng, m, d);

            DnspOptions opts;
            opts.tol = config.tol;
            opts.strict_margin = config.strict_margin;
            opts.sampling_budget = config.sampling_budget;
            opts.seed = rng.next_u64();
            const DnspReport r_base = check_dnsp(a, base.matrix, k, opts);
            opts.seed = rng.next_u64();
            const DnspReport r_tilde = check_dnsp(a, tilde.matrix, k, opts);

            json record{{"instance", i},
                        {"family", family_name(base.family)},
                        {"d", d},
                        {"n", n0},
                        {"copies", index_set.size()},
                        {"m", m},
                        {"k", k},
                        {"base_decision", to_string(r_base.decision)},
                        {"tilde_decision", to_string(r_tilde.decision)}};

            const bool base_decisive = r_base.decision != DnspDecision::Undecided;
            const bool tilde_decisive = r_tilde.decision != DnspDecision::Undecided;
            if (base_decisive && tilde_decisive) {
                if (r_base.decision == r_tilde.decision) {
                    ++report.agreements;
                    record["classification"] = "agreement";
                } else {
                    record["classification"] = "violation";
                    json v = record;
                    v["base"] = to_json(r_base);
                    v["tilde"] = to_json(r_tilde);
                    report.violations.push_back(std::move(v));
                }
            } else {
                ++report.undecided;
                record["classification"] = "undecided";
            }
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"instance", i}, {"error", e.what()}});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Proposition 2: D-NSP for [B, B alpha] implies B-NSP

ExperimentReport experiment_augment_implication(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "augment-implication";
    report.config = config_to_json(config);

    for (std::size_t i = 0; i < config.instances; ++i) {
        Rng rng(child_seed(config.seed, i));
        try {
            const std::size_t d = draw_in(rng, config.d_min, config.d_max);
            const std::size_t nb = draw_in(rng, d, d + std::min<std::size_t>(2, config.n_extra_max));
            const Dictionary b = gaussian_dictionary(d, nb, rng.next_u64());

            std::vector<double> alpha(nb, 0.0);
            switch (i % 3) {
                case 0:
                    alpha[rng.uniform_index(nb)] = 1.0;  // duplicates one column
                    break;
                case 1: {
                    const std::size_t j1 = rng.uniform_index(nb);
                    std::size_t j2 = rng.uniform_index(nb - 1);
                    if (j2 >= j1) ++j2;
                    alpha[j1] = 0.5;
                    alpha[j2] = 0.5;
                    break;
                }
                default: {
                    const std::vector<double> g = rng.normal_vector(nb);
                    const double target = 0.3 + 0.7 * rng.uniform();
                    const double mass = norm1(g);
                    for (std::size_t j = 0; j < nb; ++j) alpha[j] = g[j] * target / mass;
                    break;
                }
            }
            const Dictionary dict = augment_column(b, alpha);

            const std::size_t m = draw_in(rng, 1, d - 1);
            std::size_t k = config.k_values[rng.uniform_index(config.k_values.size())];
            k = std::min(k, b.size());
            const DenseMatrix a = gaussian_matrix(rng, m, d);

            DnspOptions opts;
            opts.tol = config.tol;
            opts.strict_margin = config.strict_margin;
            opts.sampling_budget = config.sampling_budget;
            opts.seed = rng.next_u64();
            const DnspReport r_d = check_dnsp(a, dict.matrix, k, opts);
            opts.seed = rng.next_u64();
            const DnspReport r_b = check_dnsp(a, b.matrix, k, opts);

            json record{{"instance", i},
                        {"d", d},
                        {"n_b", nb},
                        {"m", m},
                        {"k", k},
                        {"alpha_mass", json_number(norm1(alpha))},
                        {"d_decision", to_string(r_d.decision)},
                        {"b_decision", to_string(r_b.decision)}};

            if (r_d.decision == DnspDecision::Holds && r_b.decision == DnspDecision::Fails) {
                record["classification"] = "violation";
                json v = record;
                v["d_report"] = to_json(r_d);
                v["b_report"] = to_json(r_b);
                report.violations.push_back(std::move(v));
            } else if (r_d.decision == DnspDecision::Undecided ||
                       (r_d.decision == DnspDecision::Holds &&
                        r_b.decision == DnspDecision::Undecided)) {
                ++report.undecided;
                record["classification"] = "undecided";
            } else {
                ++report.agreements;
                record["classification"] = "agreement";
            }
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"instance", i}, {"error", e.what()}});
        }
    }
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------
// Theorem-2 stability bound under noise

ExperimentReport experiment_stability(const ExperimentConfig& config) {
    validate_config(config);
    Stopwatch clock;
    ExperimentReport report;
    report.name = "stability";
    report.config = config_to_json(config);

    std::size_t trials_done = 0;
    std::size_t skipped = 0;
    const std::size_t attempt_cap = std::max<std::size_t>(config.instances, 4 * config.trials / std::max<std::size_t>(config.noise_levels.size(), 1));

    for (std::size_t attempt = 0; attempt < attempt_cap && trials_done < config.trials; ++attempt) {
        Rng rng(child_seed(config.seed, attempt));
        try {
            const std::size_t d = draw_in(rng, std::max<std::size_t>(config.d_min, 2), config.d_max);
            // keep dim ker(AD) in {1, 2} so the constant is exact or
            // mesh-certified rather than a loose sampled estimate
            std::size_t n = d, m = d - 1;
            switch (attempt % 3) {
                case 0:
                    break;  // n = d, m = d-1: one-dimensional kernel
                case 1:
                    if (d >= 3) m = d - 2;  // n = d, two-dimensional kernel
                    break;
                default:
                    n = d + 1;  // overcomplete, two-dimensional kernel
                    break;
            }
            Dictionary dict = identity_dictionary(d);
            if (n == d) {
                dict = (attempt % 2 == 0) ? gaussian_dictionary(d, n, rng.next_u64())
                                          : harmonic_frame(d, n);
            } else {
                dict = gaussian_dictionary(d, n, rng.next_u64());
            }
            std::size_t k = config.k_values[rng.uniform_index(config.k_values.size())];
            k = std::min(k, n);
            const DenseMatrix a = gaussian_matrix(rng, m, d);

            DnspOptions opts;
            opts.tol = config.tol;
            opts.strict_margin = config.strict_margin;
            opts.sampling_budget = config.sampling_budget;
            opts.seed = rng.next_u64();
            const DnspReport rep = check_dnsp(a, dict.matrix, k, opts);
            if (rep.decision != DnspDecision::Holds) {
                ++skipped;
                continue;
            }

            const SnspEstimate snsp = snsp_constant(a, dict.matrix, k, config.tol);
            if (!(snsp.c > 0.0) || !std::isfinite(snsp.c)) {
                ++skipped;
                continue;
            }
            const double nu_a = min_singular_value(a);
            const double nu_d = min_singular_value(dict.matrix);
            const StabilityConstants sc = stability_constants(snsp.c, nu_a, nu_d, n);

            json record{{"attempt", attempt},
                        {"family", family_name(dict.family)},
                        {"d", d},
                        {"n", n},
                        {"m", m},
                        {"k", k},
                        {"c", json_number(snsp.c)},
                        {"snsp_method", to_string(snsp.method)},
                        {"nu_a", json_number(nu_a)},
                        {"nu_d", json_number(nu_d)},
                        {"c1", json_number(sc.c1)},
                        {"c2", json_number(sc.c2)}};
            json trial_list = json::array();
            bool ok = true;

            for (double eps : config.noise_levels) {
                if (trials_done >= config.trials) break;

                // k dominant entries; noisy trials add a geometric 0.5 tail
                std::vector<std::size_t> all(n);
                for (std::size_t j = 0; j < n; ++j) all[j] = j;
                for (std::size_t j = 0; j + 1 < n; ++j) std::swap(all[j], all[j + rng.uniform_index(n - j)]);
                std::vector<double> z0(n, 0.0);
                for (std::size_t j = 0; j < k; ++j) {
                    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
                    z0[all[j]] = sign * (1.0 + rng.uniform());
                }
                if (eps > 0.0) {
                    double mag = 0.25;
                    for (std::size_t j = k; j < n; ++j) {
                        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
                        z0[all[j]] = sign * mag;
                        mag *= 0.5;
                    }
                }
                const double sigma_k = best_k_term_residual(z0, k);
                const std::vector<double> x0 = dict.matrix * z0;
                std::vector<double> y = (a * dict.matrix) * z0;

                double lhs = 0.0;
                bool converged = true;
                if (eps == 0.0) {
                    const RecoveryResult res = l1_synthesis_exact({a, dict.matrix, y, 0.0});
                    lhs = norm2(sub(res.x_hat, x0));
                } else {
                    const std::vector<double> w = scaled(rng.unit_vector(m), eps);
                    y = add(y, w);
                    DenoiseOptions dn;
                    dn.iter_cap = config.denoise_iter_cap;
                    const RecoveryResult res = l1_synthesis_denoise({a, dict.matrix, y, eps}, dn);
                    if (res.status != RecoveryStatus::Optimal) {
                        converged = false;
                        report.errors.push_back(json{{"attempt", attempt},
                                                     {"eps", eps},
                                                     {"error", "denoiser did not converge"},
                                                     {"primal", json_number(res.primal_residual)},
                                                     {"dual", json_number(res.dual_residual)}});
                    } else {
                        lhs = norm2(sub(res.x_hat, x0));
                    }
                }
                if (!converged) continue;

                const double rhs = sc.c1 * sigma_k + sc.c2 * eps + 1e-6;
                ++trials_done;
                trial_list.push_back(json{{"eps", eps},
                                          {"sigma_k", json_number(sigma_k)},
                                          {"lhs", json_number(lhs)},
                                          {"rhs", json_number(rhs)},
                                          {"ratio", json_number(rhs > 0 ? lhs / rhs : 0.0)}});
                if (lhs > rhs) {
                    ok = false;
                    json v = record;
                    v["kind"] = "bound-violation";
                    v["eps"] = eps;
                    v["lhs"] = json_number(lhs);
                    v["rhs"] = json_number(rhs);
                    v["z0"] = z0;
                    report.violations.push_back(std::move(v));
                }
            }
            record["trials"] = std::move(trial_list);
            if (ok) ++report.agreements;
            record["classification"] = ok ? "agreement" : "violation";
            report.records.push_back(std::move(record));
        } catch (const std::exception& e) {
            report.errors.push_back(json{{"attempt", attempt}, {"error", e.what()}});
        }
    }
    if (trials_done < config.trials) {
        report.errors.push_back(json{{"error", "trial target not reached within the attempt cap"},
                                     {"trials_done", trials_done},
                                     {"target", config.trials}});
    }
    report.config["skipped_instances"] = skipped;
    report.wall_seconds = clock.seconds();
    return report;
}

// ---------------------------------------------------------------------------

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.name == "equivalence") return experiment_equivalence(config);
    if (config.name == "fullspark-equivalence") return experiment_fullspark_equivalence(config);
    if (config.name == "inadmissible") return experiment_inadmissible(config);
    if (config.name == "repeat-invariance") return experiment_repeat_invariance(config);
    if (config.name == "augment-implication") return experiment_augment_implication(config);
    if (config.name == "stability") return experiment_stability(config);
    throw std::invalid_argument("unknown experiment: " + config.name);
}

std::vector<std::string> experiment_names() {
    return {"equivalence",       "fullspark-equivalence", "inadmissible",
            "repeat-invariance", "augment-implication",   "stability"};
}

}  // namespace nspkit
