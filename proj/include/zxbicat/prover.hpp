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

#include "zxbicat/zx_rules.hpp"

namespace zxbicat {

struct Budget {
  std::size_t max_steps = 8;
  std::size_t max_states = 10000;
  /// Largest state explored; 0 means 2 * max(|f|, |g|) + 4 nodes.
  std::size_t max_nodes = 0;
};

enum class Direction { Forward, Backward };

/// One rewrite between consecutive states. A forward step applies `rule`
/// at `match` inside `from`; a backward step applies it inside `to` and
/// yields (a graph isomorphic to) `from`.
struct DerivationStep {
  std::string rule;
  Direction direction = Direction::Forward;
  GraphMorphism match;  ///< lhs body -> the host of the application
  std::optional<NodeId> expansion_node;
  OpenGraph from;
  OpenGraph to;
  TwoCell witness;  ///< from => to
};

struct Derivation {
  OpenGraph start;
  std::vector<DerivationStep> steps;
  OpenGraph end;
  TwoCell witness;  ///< start => end, vertical composite of the steps
};

enum class ProofStatus { Found, NotFoundWithinBudget };

struct ProofResult {
  ProofStatus status = ProofStatus::NotFoundWithinBudget;
  std::optional<Derivation> derivation;
  std::size_t states = 0;  ///< distinct states stored on both sides
};

/// Bidirectional breadth-first search over single rule applications of
/// every matchable canonical variant, states keyed by canonical_key.
/// Throws ArityMismatch when the interfaces differ in size.
ProofResult prove_equal(const OpenGraph& f, const OpenGraph& g, const Budget& budget = {},
                        const RuleSet& rules = RuleSet::standard());

/// Re-applies every step and checks the chain and the witness. Throws the
/// first failure (InvalidArgument or a rewrite error).
void replay(const Derivation& d, const RuleSet& rules = RuleSet::standard());

/// Greedy size reduction: wire contraction, spider fusion and trivial
/// spider removal first, then any other forward rule that shrinks the
/// graph. Stops at a fixpoint or after `max_steps` rewrites.
OpenGraph normalize(const OpenGraph& f, std::size_t max_steps = 1000,
                    const RuleSet& rules = RuleSet::standard());

}  // namespace zxbicat
