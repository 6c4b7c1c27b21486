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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zxbicat/prover.hpp"
#include "zxbicat/zx_term.hpp"

namespace zxbicat {

struct LawReport {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Cases where a stronger, informational comparison also held.
  std::size_t informational = 0;
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return cases > 0 && failures == 0; }
};

// Random generation ---------------------------------------------------------

/// A well-aried term of height at most `max_depth`. When `inputs` is set the
/// term has exactly that many inputs.
TermPtr random_term(std::mt19937_64& rng, std::size_t max_depth, std::optional<std::size_t> inputs = std::nullopt);

/// translate(random_term) with at most `max_nodes` body nodes.
OpenGraph random_diagram(std::mt19937_64& rng, std::size_t max_nodes,
                         std::optional<std::size_t> inputs = std::nullopt);

/// The witness of a uniformly chosen rule application inside `host`. With
/// `allow_identity` the identity 2-cell is one more candidate; otherwise
/// nullopt when `host` has no match.
std::optional<TwoCell> random_rule_cell(std::mt19937_64& rng, const OpenGraph& host,
                                        const RuleSet& rules = RuleSet::standard(), bool allow_identity = true);

// General cospans and squares over typed graphs ----------------------------

struct Cospan {
  TypedGraph left;
  TypedGraph apex;
  TypedGraph right;
  GraphMorphism l;  ///< left -> apex
  GraphMorphism r;  ///< right -> apex
};

Cospan identity_cospan(const TypedGraph& a);
/// Requires a.right == b.left.
Cospan compose_cospans(const Cospan& a, const Cospan& b);
Cospan opposite(const Cospan& c);

/// A square of the double category: cospans above and below, isomorphisms
/// on the left and right sides, and a span top.apex <- m -> bottom.apex
/// under the top feet.
struct Square {
  Cospan top;
  Cospan bottom;
  GraphMorphism phi;  ///< top.left -> bottom.left, iso
  GraphMorphism psi;  ///< top.right -> bottom.right, iso
  TypedGraph m;
  GraphMorphism s;   ///< m -> top.apex
  GraphMorphism t;   ///< m -> bottom.apex
  GraphMorphism ml;  ///< top.left -> m
  GraphMorphism mr;  ///< top.right -> m

  void validate() const;  ///< throws InvalidMorphism
};

/// Identity square on a vertical isomorphism phi : a -> b.
Square vertical_unit(const TypedGraph& a, const TypedGraph& b, const GraphMorphism& phi);
/// Identity square on a cospan.
Square horizontal_unit(const Cospan& c);
/// sigma above tau: requires sigma.bottom == tau.top.
Square stack(const Square& sigma, const Square& tau);
/// sigma beside tau: requires matching right and left sides.
Square beside(const Square& sigma, const Square& tau);
Square tensor_squares(const Square& a, const Square& b);

/// Equal up to isomorphism of the cospans and the span, fixing the feet and
/// the side isomorphisms.
bool squares_equivalent(const Square& a, const Square& b);

/// A span a <- x -> b with invertible legs.
struct IsoSpan {
  TypedGraph a;
  TypedGraph x;
  TypedGraph b;
  GraphMorphism to_a;
  GraphMorphism to_b;
};

struct Companion {
  Cospan companion;  ///< a -f-> b <-id- b
  Cospan conjoint;   ///< b -id-> b <-f- a
  Square unit;       ///< companion over id_b, sides f and id
  Square counit;     ///< id_a over companion, sides id and f
  Square conjoint_unit;
  Square conjoint_counit;
};

Companion companion_data(const IsoSpan& f);

// Laws ----------------------------------------------------------------------

LawReport check_interchange(std::uint64_t seed, std::size_t cases, const RuleSet& rules = RuleSet::standard());

/// Pushout of x+x <- x+x+x -> x+x along the two partial codiagonals is x.
bool check_pushout_lemma(const TypedGraph& x);
LawReport check_pushout_lemma_random(std::uint64_t seed, std::size_t cases);

/// Companion and conjoint equations and conjoint = opposite companion.
bool check_companions(const IsoSpan& f);
LawReport check_companions_random(std::uint64_t seed, std::size_t cases);

struct SnakeResult {
  bool found = false;
  std::size_t steps = 0;
  bool witness_valid = false;
};

/// (ev(n) + W_n) . (W_n + coev(n)) against identity(n), where W_n is n
/// parallel wire generators; `daggered` flips the composite.
SnakeResult check_snake(std::size_t n, const Budget& budget = {}, bool daggered = false);
OpenGraph snake(std::size_t n);

/// U(f + g) agrees with U(f) + U(g) componentwise.
bool check_monoidal_unit_cells(const IsoSpan& f, const IsoSpan& g);
LawReport check_monoidal_unit_cells_random(std::uint64_t seed, std::size_t cases);

/// vertical_compose(a, reverse(a)) against identity_2cell(a.dom).
LawReport check_groupoid(std::uint64_t seed, std::size_t cases, const RuleSet& rules = RuleSet::standard());

/// Random iso span with at most `max_nodes` nodes.
IsoSpan random_iso_span(std::mt19937_64& rng, std::size_t max_nodes);
TypedGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges);

}  // namespace zxbicat
