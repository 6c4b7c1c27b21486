// Copyright 2026 The zxbicat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "zxbicat/laws.hpp"
#include "zxbicat/prover.hpp"
#include "zxbicat/semantics.hpp"

namespace zxbicat {

using Json = nlohmann::ordered_json;

// Every *_from_json throws InvalidJson for structural problems and the
// usual graph errors (IllegalEdge, InvalidGraph, ...) for invalid content.

Json to_json(const Phase& p);
Phase phase_from_json(const Json& j);

/// {"nodes":[{"id","label","phase"?}],"edges":[{"src","tgt"}],"inputs","outputs"}
Json to_json(const OpenGraph& f);
OpenGraph open_graph_from_json(const Json& j);
/// Node and edge lists only; used for rule apexes.
Json graph_to_json(const TypedGraph& g);
TypedGraph graph_from_json(const Json& j);

/// {"nodeMap":[..],"edgeMap":[..]}
Json to_json(const GraphMorphism& m);
GraphMorphism morphism_from_json(const Json& j);

/// {"dom","cod","apex","legDown","legUp"}
Json to_json(const TwoCell& c);
TwoCell two_cell_from_json(const Json& j);

/// {"name","L","R","K","kl","kr"}
Json to_json(const RewriteRule& r);
RewriteRule rule_from_json(const Json& j);

Json to_json(const RuleVariant& v);
/// {"rule","nodeMap","edgeMap","expansionNode"?}
Json match_to_json(const Match& m);
Json to_json(const Derivation& d);
Json to_json(const ProofResult& r);
/// {"rows","cols","data"}: data is row-major, one [re, im] pair per entry.
Json to_json(const ComplexMatrix& m);
Json to_json(const SoundnessResult& r);
Json to_json(const LawReport& r);

/// Compact dump with sorted keys; equal diagrams give equal bytes.
std::string canonical_json(const OpenGraph& f);
/// Lowercase hex SHA-256 of canonical_json.
std::string content_id(const OpenGraph& f);

/// Parses text, mapping parse failures to InvalidJson.
Json parse_json(std::string_view text);

}  // namespace zxbicat
