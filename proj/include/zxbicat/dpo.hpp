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

#include <optional>
#include <string>
#include <vector>

#include "zxbicat/two_cell.hpp"

namespace zxbicat {

enum class RuleTag { Basic, Closure };

/// A span L <- K -> R of open graphs whose apex K is edgeless and whose
/// legs carry the feet of L and R.
struct RewriteRule {
  std::string name;
  OpenGraph lhs;
  OpenGraph rhs;
  TypedGraph k;
  GraphMorphism kl;  ///< k -> lhs.body
  GraphMorphism kr;  ///< k -> rhs.body
  RuleTag tag = RuleTag::Basic;

  /// Throws InvalidMorphism if the legs or the interface factorization fail.
  void validate() const;
};

/// Rule with the standard apex: one open node per interface position of
/// A + B, sent to L's and R's feet.
RewriteRule make_rule(std::string name, OpenGraph lhs, OpenGraph rhs, RuleTag tag = RuleTag::Basic);

/// The span turned around.
RewriteRule reversed(const RewriteRule& rule);

struct Match {
  RewriteRule rule;
  GraphMorphism m;  ///< rule.lhs.body -> host.body, mono
  /// Set for wire expansion, which is not a DPO step.
  std::optional<NodeId> expansion_node;
};

struct Rewrite {
  OpenGraph result;
  TwoCell witness;  ///< host => result
};

/// Throws BoundaryViolation, DanglingCondition or InvalidArgument when the
/// match cannot be applied; returns normally otherwise.
void check_applicable(const OpenGraph& host, const Match& match);
bool is_applicable(const OpenGraph& host, const Match& match) noexcept;

/// Every applicable mono match of a fixed rule, in enumeration order.
std::vector<Match> find_rule_matches(const RewriteRule& rule, const OpenGraph& host,
                                     const NodePins& pins = {});

/// Double-pushout step, or wire expansion when the match says so.
Rewrite apply(const OpenGraph& host, const Match& match);

/// Splits an open node into two joined by a fresh edge. The first incident
/// item (input occurrences, then incoming edge ends, outgoing edge ends,
/// output occurrences) stays on the source copy; the rest move to the
/// target copy. Throws NotOpenNode.
Rewrite apply_wire_expansion(const OpenGraph& host, NodeId node);

}  // namespace zxbicat
