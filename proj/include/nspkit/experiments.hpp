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
#include <string>
#include <vector>

#include <json.hpp>

namespace nspkit {

/// Knobs shared by every experiment. Each experiment reads the subset it
/// needs; validate() enforces the desk-scale limits (d <= 8, n <= 12,
/// instance count <= 1e4).
struct ExperimentConfig {
    std::string name;
    std::uint64_t seed = 7;

    std::size_t instances = 200;
    std::size_t d_min = 2;
    std::size_t d_max = 5;
    std::size_t n_extra_max = 3;  // n is drawn from [d, d + n_extra_max]
    std::vector<std::size_t> k_values = {1, 2};

    double tol = 1e-9;
    double strict_margin = 1e-7;
    std::size_t sampling_budget = 10000;

    // recovery oracle
    std::size_t coefficient_draws = 3;
    double success_tol = 1e-6;

    // full-spark experiment
    std::size_t recovery_trials = 5;

    // inadmissibility experiment
    std::size_t dictionaries = 50;
    std::size_t sensing_draws = 100;
    double radius = 0.3;

    // stability experiment
    std::size_t trials = 500;
    std::vector<double> noise_levels = {0.0, 1e-4, 1e-3, 1e-2, 1e-1};
    std::size_t denoise_iter_cap = 50000;

    std::string out_path;  // empty = stdout only
};

void validate_config(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& config);

/// Outcome of one experiment sweep. Undecided checker outputs are never
/// counted as agreement or disagreement; per-instance exceptions land in
/// errors without aborting the sweep. A run passes iff both the violations
/// and the errors lists are empty.
struct ExperimentReport {
    std::string name;
    nlohmann::json config;
    nlohmann::json records = nlohmann::json::array();
    nlohmann::json violations = nlohmann::json::array();
    nlohmann::json errors = nlohmann::json::array();
    std::size_t agreements = 0;
    std::size_t undecided = 0;
    double wall_seconds = 0.0;

    bool passed() const { return violations.empty() && errors.empty(); }
    nlohmann::json to_json() const;
};

ExperimentReport experiment_equivalence(const ExperimentConfig& config);
ExperimentReport experiment_fullspark_equivalence(const ExperimentConfig& config);
ExperimentReport experiment_inadmissible(const ExperimentConfig& config);
ExperimentReport experiment_repeat_invariance(const ExperimentConfig& config);
ExperimentReport experiment_augment_implication(const ExperimentConfig& config);
ExperimentReport experiment_stability(const ExperimentConfig& config);

/// Dispatch by config.name; throws std::invalid_argument for unknown names.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::vector<std::string> experiment_names();

}  // namespace nspkit
