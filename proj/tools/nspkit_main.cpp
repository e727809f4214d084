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

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nspkit/dictionary.hpp"
#include "nspkit/experiments.hpp"
#include "nspkit/matrix_io.hpp"
#include "nspkit/properties.hpp"
#include "nspkit/recovery.hpp"
#include "nspkit/report_json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;        // holds / computed
constexpr int kExitFails = 1;     // property fails (or experiment violations)
constexpr int kExitUndecided = 2;
constexpr int kExitError = 3;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << j.dump(2) << "\n";
    }
}

struct CheckArgs {
    std::string property;
    std::string a_path;
    std::string d_path;
    std::size_t k = 1;
    double tol = nspkit::kDefaultRankTol;
    double strict_margin = nspkit::kDefaultStrictMargin;
    std::size_t sampling_budget = 10000;
    std::uint64_t seed = 0x6e73706b69740001ULL;
    std::string out_path;
};

int run_check(const CheckArgs& args) {
    using namespace nspkit;
    const bool have_a = !args.a_path.empty();
    const bool have_d = !args.d_path.empty();

    if (args.property == "spark") {
        const DenseMatrix m = read_matrix(have_d ? args.d_path : args.a_path);
        const SparkReport rep = spark(m, args.tol);
        if (rep.spark) {
            std::cerr << "spark " << *rep.spark << ", full_spark "
                      << (rep.full_spark ? "true" : "false") << "\n";
        } else {
            std::cerr << "spark none (no dependent subset), full_spark true\n";
        }
        emit(to_json(rep), args.out_path);
        return kExitOk;
    }
    if (args.property == "nsp") {
        DenseMatrix m = read_matrix(args.a_path);
        if (have_d) m = m * read_matrix(args.d_path);
        const NspReport rep = check_nsp(m, args.k, args.tol, args.strict_margin);
        std::cerr << "nsp order " << args.k << (rep.holds ? " holds" : " fails")
                  << ", worst_ratio " << rep.worst_ratio << "\n";
        emit(to_json(rep), args.out_path);
        return rep.holds ? kExitOk : kExitFails;
    }
    if (!have_a || !have_d) throw CLI::ValidationError("dnsp/snsp need both --A and --D");
    const DenseMatrix a = read_matrix(args.a_path);
    const DenseMatrix d = read_matrix(args.d_path);
    if (args.property == "dnsp") {
        DnspOptions opts;
        opts.tol = args.tol;
        opts.strict_margin = args.strict_margin;
        opts.sampling_budget = args.sampling_budget;
        opts.seed = args.seed;
        const DnspReport rep = check_dnsp(a, d, args.k, opts);
        std::cerr << "dnsp order " << args.k << " " << to_string(rep.decision) << " via "
                  << to_string(rep.method) << "\n";
        emit(to_json(rep), args.out_path);
        switch (rep.decision) {
            case DnspDecision::Holds: return kExitOk;
            case DnspDecision::Fails: return kExitFails;
            case DnspDecision::Undecided: return kExitUndecided;
        }
    }
    if (args.property == "snsp") {
        const SnspEstimate est = snsp_constant(a, d, args.k, args.tol);
        std::cerr << "snsp order " << args.k << " c = " << est.c << " (" << to_string(est.method)
                  << ")\n";
        emit(to_json(est), args.out_path);
        return kExitOk;
    }
    throw CLI::ValidationError("unknown property: " + args.property);
}

struct RecoverArgs {
    std::string a_path, d_path, y_path, manifest_path;
    double eps = 0.0;
    std::string out_path;
};

int run_recover(const RecoverArgs& args_in) {
    using namespace nspkit;
    RecoverArgs args = args_in;
    if (!args.manifest_path.empty()) {
        std::ifstream in(args.manifest_path);
        if (!in) throw std::runtime_error("cannot open manifest: " + args.manifest_path);
        json manifest = json::parse(in);
        args.a_path = manifest.at("A").get<std::string>();
        args.d_path = manifest.at("D").get<std::string>();
        args.y_path = manifest.at("y").get<std::string>();
        args.eps = manifest.value("eps", 0.0);
    }
    RecoveryProblem prob;
    prob.a = read_matrix(args.a_path);
    prob.d = read_matrix(args.d_path);
    prob.y = read_vector(args.y_path);
    prob.eps = args.eps;

    const RecoveryResult res =
        prob.eps == 0.0 ? l1_synthesis_exact(prob) : l1_synthesis_denoise(prob);
    std::cerr << "recover: " << to_string(res.status) << ", objective " << res.objective << "\n";
    emit(to_json(res), args.out_path);
    return res.status == RecoveryStatus::Infeasible ? kExitError : kExitOk;
}

struct ExperimentArgs {
    std::string name;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> instances;
    std::optional<std::size_t> sampling_budget;
    std::optional<double> tol;
    std::optional<double> strict_margin;
    std::string out_path;
};

int run_experiment_cmd(const ExperimentArgs& args) {
    using namespace nspkit;
    ExperimentConfig config;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in) throw std::runtime_error("cannot open config: " + args.config_path);
        config = config_from_json(json::parse(in));
    }
    config.name = args.name;
    if (args.seed) config.seed = *args.seed;
    if (args.instances) config.instances = *args.instances;
    if (args.sampling_budget) config.sampling_budget = *args.sampling_budget;
    if (args.tol) config.tol = *args.tol;
    if (args.strict_margin) config.strict_margin = *args.strict_margin;
    if (!args.out_path.empty()) config.out_path = args.out_path;

    const ExperimentReport report = run_experiment(config);
    const json j = report.to_json();
    std::cerr << "experiment " << report.name << ": " << report.records.size() << " records, "
              << report.agreements << " agreements, " << report.undecided << " undecided, "
              << report.violations.size() << " violations, " << report.errors.size()
              << " errors (" << report.wall_seconds << " s)\n";
    emit(j, config.out_path);
    return report.passed() ? kExitOk : kExitFails;
}

struct MakeDictArgs {
    std::string family;
    std::size_t d = 3;
    std::size_t n = 4;
    double radius = 0.3;
    std::uint64_t seed = 7;
    std::string out_base;
};

int run_make_dict(const MakeDictArgs& args) {
    using namespace nspkit;
    Dictionary dict;
    if (args.family == "identity") {
        dict = identity_dictionary(args.d);
    } else if (args.family == "gaussian") {
        dict = gaussian_dictionary(args.d, args.n, args.seed);
    } else if (args.family == "perturbed-basis") {
        dict = perturbed_basis_dictionary(args.d, args.radius, args.seed);
    } else if (args.family == "harmonic") {
        dict = harmonic_frame(args.d, args.n);
    } else {
        throw CLI::ValidationError("unknown family: " + args.family);
    }
    write_matrix(args.out_base + ".txt", dict.matrix);
    std::ofstream meta(args.out_base + ".json");
    if (!meta) throw std::runtime_error("cannot open for writing: " + args.out_base + ".json");
    meta << dictionary_metadata(dict).dump(2) << "\n";
    std::cerr << "wrote " << args.out_base << ".txt and " << args.out_base << ".json\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"null-space-property toolkit for synthesis sparse recovery"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "decide a property of given matrices");
    check->add_option("--property", check_args.property, "nsp | dnsp | spark | snsp")->required();
    check->add_option("--A,-A", check_args.a_path, "sensing matrix file");
    check->add_option("--D,-D", check_args.d_path, "dictionary matrix file");
    check->add_option("-k,--order", check_args.k, "sparsity order k");
    check->add_option("--tol", check_args.tol, "rank / kernel tolerance");
    check->add_option("--strict-margin", check_args.strict_margin, "strict inequality margin");
    check->add_option("--sampling-budget", check_args.sampling_budget, "falsification budget");
    check->add_option("--seed", check_args.seed, "falsification seed");
    check->add_option("--out", check_args.out_path, "write the JSON report here");

    RecoverArgs recover_args;
    auto* recover = app.add_subcommand("recover", "l1-synthesis recovery");
    recover->add_option("--A,-A", recover_args.a_path, "sensing matrix file");
    recover->add_option("--D,-D", recover_args.d_path, "dictionary matrix file");
    recover->add_option("--y,-y", recover_args.y_path, "measurement vector file");
    recover->add_option("--eps", recover_args.eps, "noise level (0 = equality constrained)");
    recover->add_option("--manifest", recover_args.manifest_path,
                        "JSON manifest with A / D / y paths and eps");
    recover->add_option("--out", recover_args.out_path, "write the JSON result here");

    ExperimentArgs exp_args;
    auto* experiment = app.add_subcommand("experiment", "run a seeded experiment sweep");
    experiment->add_option("name", exp_args.name, "experiment name")
        ->required()
        ->check(CLI::IsMember(nspkit::experiment_names()));
    experiment->add_option("--config", exp_args.config_path, "JSON config file");
    experiment->add_option("--seed", exp_args.seed, "override the seed");
    experiment->add_option("--instances", exp_args.instances, "override the instance count");
    experiment->add_option("--sampling-budget", exp_args.sampling_budget, "override the budget");
    experiment->add_option("--tol", exp_args.tol, "override the tolerance");
    experiment->add_option("--strict-margin", exp_args.strict_margin, "override the margin");
    experiment->add_option("--out", exp_args.out_path, "write the JSON report here");

    MakeDictArgs dict_args;
    auto* make_dict = app.add_subcommand("make-dict", "construct a dictionary with its sidecar");
    make_dict->add_option("--family", dict_args.family,
                          "identity | gaussian | perturbed-basis | harmonic")
        ->required();
    make_dict->add_option("-d,--dim", dict_args.d, "signal dimension d");
    make_dict->add_option("-n,--size", dict_args.n, "dictionary size n");
    make_dict->add_option("--radius", dict_args.radius, "perturbation radius");
    make_dict->add_option("--seed", dict_args.seed, "generator seed");
    make_dict->add_option("--out", dict_args.out_base, "output base path")->required();

    try {
        app.parse(argc, argv);
        if (*check) return run_check(check_args);
        if (*recover) return run_recover(recover_args);
        if (*experiment) return run_experiment_cmd(exp_args);
        if (*make_dict) return run_make_dict(dict_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
