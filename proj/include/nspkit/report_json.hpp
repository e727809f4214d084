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

#include <json.hpp>

#include "nspkit/dictionary.hpp"
#include "nspkit/properties.hpp"
#include "nspkit/recovery.hpp"

namespace nspkit {

/// JSON-safe double: finite values stay numbers, +-inf and nan become
/// strings ("inf", "-inf", "nan") so reports never carry JSON null.
nlohmann::json json_number(double x);

nlohmann::json to_json(const SupportSet& s);
nlohmann::json to_json(const SparkReport& r);
nlohmann::json to_json(const NspReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const DnspReport& r);
nlohmann::json to_json(const SnspEstimate& e);
nlohmann::json to_json(const RecoveryResult& r);

const char* to_string(DnspDecision d);
const char* to_string(DnspMethod m);
const char* to_string(SnspMethod m);
const char* to_string(RecoveryStatus s);

/// Sidecar metadata for a dictionary: family, parameters, seed, and the
/// verified reports. The matrix itself travels in the shared text format.
nlohmann::json dictionary_metadata(const Dictionary& dict);

}  // namespace nspkit
