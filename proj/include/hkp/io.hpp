// Copyright 2026 The HKP Workbench Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hkp/clone.hpp"
#include "hkp/congruence.hpp"
#include "hkp/hardness.hpp"
#include "hkp/quantum.hpp"
#include "hkp/solvers.hpp"

namespace hkp::io {

using Json = nlohmann::ordered_json;

// Parsers throw InvalidInput with a message naming the offending field.

Json to_json(const TruthTable& op);
TruthTable truth_table_from_json(const Json& j);

Json to_json(const GeneratorSet& gens);
/// Accepts a bare array of truth tables or {"gens": [...]}.
GeneratorSet gens_from_json(const Json& j);

Json to_json(const Congruence& theta);
/// {"n": n, "blocks": [[bitstrings], ...]}; blocks must partition {0,1}^n.
Congruence congruence_from_json(const Json& j);

Json to_json(const Classification& c);
Json to_json(const SolveReport& r);
Json to_json(const CollisionStats& s);

/// Nonzero outcomes only, keyed by bitstring in ascending order.
Json to_json(const OutcomeDistribution& d);

Json parse_text(std::string_view text);

/// Flat CSV projection of an array of objects with scalar values. Columns
/// follow the first row's key order.
std::string rows_to_csv(const Json& rows);

}  // namespace hkp::io
