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

#include "nspkit/report_json.hpp"

#include <cmath>

namespace nspkit {

using nlohmann::json;

json json_number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

json to_json(const SupportSet& s) {
    return json{{"indices", s.indices()}, {"ambient", s.ambient()}};
}

json to_json(const SparkReport& r) {
    json j;
    if (r.spark) {
        j["spark"] = *r.spark;
    } else {
        j["spark"] = "no-dependence";
    }
    j["full_spark"] = r.full_spark;
    j["witness"] = r.witness;
    return j;
}

json to_json(const NspReport& r) {
    json j;
    j["holds"] = r.holds;
    j["worst_ratio"] = json_number(r.worst_ratio);
    j["order"] = r.order;
    if (r.witness_v) j["witness_v"] = *r.witness_v;
    if (r.witness_t) j["witness_t"] = to_json(*r.witness_t);
    return j;
}

json to_json(const Certificate& c) {
    return json{{"u", c.u},
                {"t", to_json(c.t)},
                {"mass_on_t", json_number(c.mass_on_t)},
                {"mass_off_t", json_number(c.mass_off_t)},
                {"min_off_support", json_number(c.min_off_support)}};
}

const char* to_string(DnspDecision d) {
    switch (d) {
        case DnspDecision::Holds: return "holds";
        case DnspDecision::Fails: return "fails";
        case DnspDecision::Undecided: return "undecided";
    }
    return "?";
}

const char* to_string(DnspMethod m) {
    switch (m) {
        case DnspMethod::FullSparkReduction: return "full-spark-reduction";
        case DnspMethod::LemmaCertificate: return "lemma-certificate";
        case DnspMethod::Falsification: return "falsification";
        case DnspMethod::SamplingOnly: return "sampling-only";
    }
    return "?";
}

const char* to_string(SnspMethod m) {
    switch (m) {
        case SnspMethod::NotApplicable: return "not-applicable";
        case SnspMethod::VacuousKernel: return "vacuous-kernel";
        case SnspMethod::ExactDim1: return "exact-dim-1";
        case SnspMethod::MeshDim2: return "mesh-dim-2";
        case SnspMethod::SampleEstimate: return "sample-estimate";
    }
    return "?";
}

const char* to_string(RecoveryStatus s) {
    switch (s) {
        case RecoveryStatus::Optimal: return "optimal";
        case RecoveryStatus::Infeasible: return "infeasible";
        case RecoveryStatus::NonConverged: return "non-converged";
    }
    return "?";
}

json to_json(const DnspReport& r) {
    json j;
    j["decision"] = to_string(r.decision);
    j["method"] = to_string(r.method);
    j["order"] = r.order;
    j["worst_margin"] = json_number(r.worst_margin);
    j["margin_evals"] = r.margin_evals;
    j["vacuous_kernel"] = r.vacuous_kernel;
    if (r.witness) {
        j["witness"] = json{{"v", r.witness->v},
                            {"t", to_json(r.witness->t)},
                            {"margin", json_number(r.witness->margin)}};
    }
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    if (r.nsp_report) j["nsp_report"] = to_json(*r.nsp_report);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const SnspEstimate& e) {
    json j;
    j["c"] = json_number(e.c);
    j["method"] = to_string(e.method);
    if (e.mesh_points > 0) j["mesh_points"] = e.mesh_points;
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

json to_json(const RecoveryResult& r) {
    json j;
    j["status"] = to_string(r.status);
    j["z_hat"] = r.z_hat;
    j["x_hat"] = r.x_hat;
    j["objective"] = json_number(r.objective);
    j["iterations"] = r.iterations;
    j["primal_residual"] = json_number(r.primal_residual);
    j["dual_residual"] = json_number(r.dual_residual);
    if (r.synthesis_spread) j["synthesis_spread"] = json_number(*r.synthesis_spread);
    return j;
}

json dictionary_metadata(const Dictionary& dict) {
    json j;
    j["family"] = family_name(dict.family);
    j["rows"] = dict.dim();
    j["cols"] = dict.size();
    j["seed"] = dict.seed;
    if (dict.radius != 0.0) j["radius"] = dict.radius;
    if (!dict.repeated.empty()) j["repeated"] = dict.repeated;
    if (!dict.alpha.empty()) j["alpha"] = dict.alpha;
    j["spark"] = to_json(dict.spark_report);
    j["kernel_dim"] = dict.kernel.count();
    if (dict.certificate) j["certificate"] = to_json(*dict.certificate);
    return j;
}

}  // namespace nspkit
