// Copyright 2026 The qhash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QHASH_REPORT_H
#define QHASH_REPORT_H

#include <string>
#include <vector>

#include "json.hpp"
#include "qhash/analysis.h"
#include "qhash/hashing.h"
#include "qhash/search.h"
#include "qhash/statevec.h"
#include "qhash/verify.h"

namespace qhash {

inline constexpr const char *kSchemaVersion = "1";

// Every CLI run emits one document:
//   {"schema_version": "1", "command": ..., "inputs": {...}, "outputs": {...},
//    "timing": {"wall_seconds": ...}}
// Doubles are written in shortest round-trip form, so parsing a document
// gives back bit-identical values.

nlohmann::json to_json(const ParamSet &params);
nlohmann::json to_json(const BiasedSet &set);
nlohmann::json to_json(const StateVector &state);
nlohmann::json to_json(const ResistanceReport &report);
nlohmann::json to_json(const SearchResult &result);
nlohmann::json to_json(const VerifyReport &report);

ResistanceReport resistance_report_from_json(const nlohmann::json &j);

nlohmann::json make_document(
    const std::string &command, nlohmann::json inputs, nlohmann::json outputs, double wall_seconds);

/// Schema violations found in a document; empty when it conforms.
std::vector<std::string> validate_document(const nlohmann::json &doc);

}  // namespace qhash

#endif
