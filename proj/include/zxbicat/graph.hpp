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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zxbicat/zx_typing.hpp"

namespace zxbicat {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId tgt = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph over S_zx. Node and edge ids are dense and
/// allocated in insertion order. Edge typing is checked on insertion.
class TypedGraph {
 public:
  TypedGraph() = default;

  NodeId add_node(const NodeLabel& label);
  /// Throws IllegalEdge if S_zx has no arrow between the two labels.
  EdgeId add_edge(NodeId src, NodeId tgt);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const NodeLabel& label(NodeId n) const { return labels_.at(n); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const NodeLabel> labels() const noexcept { return labels_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Relabels a node in place; incident edges are re-checked.
  void set_label(NodeId n, const NodeLabel& label);

  /// Number of edge endpoints at `n` (a self-loop counts twice).
  std::size_t degree(NodeId n) const;
  std::vector<EdgeId> incident_edges(NodeId n) const;

  friend bool operator==(const TypedGraph&, const TypedGraph&) = default;

 private:
  std::vector<NodeLabel> labels_;
  std::vector<Edge> edges_;
};

/// A structure map between two TypedGraphs held by the caller. Valid
/// morphisms are total, preserve edge endpoints, and preserve labels exactly.
struct GraphMorphism {
  std::vector<NodeId> node_map;
  std::vector<EdgeId> edge_map;

  static GraphMorphism identity(const TypedGraph& g);
  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

bool is_morphism(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m);
/// Throws InvalidMorphism with a description of the first violation.
void check_morphism(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m,
                    const char* what = "morphism");
bool is_mono(const GraphMorphism& m);
bool is_iso(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m);

/// `second` after `first`.
GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second);
/// Inverse of a bijective morphism.
GraphMorphism invert(const GraphMorphism& iso);

struct Coproduct {
  TypedGraph sum;
  GraphMorphism in_left;
  GraphMorphism in_right;
};

/// a + b with a's ids first.
Coproduct coproduct(const TypedGraph& a, const TypedGraph& b);
/// [f, g] : a + b -> t.
GraphMorphism copair(const Coproduct& c, const GraphMorphism& f, const GraphMorphism& g);
/// f + g : a + b -> a' + b'.
GraphMorphism sum_map(const GraphMorphism& f, const GraphMorphism& g, std::size_t left_target_nodes,
                      std::size_t left_target_edges);

/// Pushout of a <- k -> b. Nodes and edges of the apex are the classes of
/// a + b under the equivalence generated by left(x) ~ right(x), numbered by
/// first occurrence (a's elements before b's).
struct PushoutResult {
  TypedGraph apex;
  GraphMorphism in_a;
  GraphMorphism in_b;
};

PushoutResult pushout(const TypedGraph& k, const TypedGraph& a, const TypedGraph& b,
                      const GraphMorphism& left, const GraphMorphism& right);

/// Unique u : apex -> t with u . in_a = f and u . in_b = g, or nullopt if
/// (f, g) is not a cocone.
std::optional<GraphMorphism> pushout_mediator(const PushoutResult& p, const GraphMorphism& f,
                                              const GraphMorphism& g);

/// Pullback of a -> c <- b. Apex elements are the matching pairs in
/// lexicographic order.
struct PullbackResult {
  TypedGraph apex;
  GraphMorphism pr_a;
  GraphMorphism pr_b;
};

PullbackResult pullback(const TypedGraph& a, const TypedGraph& b, const TypedGraph& c,
                        const GraphMorphism& left, const GraphMorphism& right);

/// Unique u : z -> apex with pr_a . u = f and pr_b . u = g, or nullopt if
/// (f, g) does not form a cone.
std::optional<GraphMorphism> pullback_mediator(const PullbackResult& p, const GraphMorphism& f,
                                               const GraphMorphism& g);

/// Context of a DPO step: D with K -> D -> G such that the pushout of
/// L <- K -> D is G.
struct PushoutComplement {
  TypedGraph context;
  GraphMorphism k_to_context;
  GraphMorphism context_to_host;
};

/// Requires l : K -> L and m : L -> G mono. D is G with m(L - l(K)) removed.
/// Throws DanglingCondition if an edge outside m(L) touches a removed node.
PushoutComplement pushout_complement(const TypedGraph& k, const TypedGraph& l_graph,
                                     const TypedGraph& g, const GraphMorphism& l,
                                     const GraphMorphism& m);

/// Partial assignment of source nodes to target nodes.
using NodePins = std::vector<std::pair<NodeId, NodeId>>;

/// All injective label-preserving morphisms pattern -> host extending `pins`,
/// ordered lexicographically by node_map, then edge_map. `limit` = 0 means
/// unbounded.
std::vector<GraphMorphism> find_monomorphisms(const TypedGraph& pattern, const TypedGraph& host,
                                              const NodePins& pins = {}, std::size_t limit = 0);

/// A label-preserving bijection a -> b extending `pins`, if one exists.
std::optional<GraphMorphism> find_isomorphism(const TypedGraph& a, const TypedGraph& b,
                                              const NodePins& pins = {});

/// Every isomorphism a -> b extending `pins`.
std::vector<GraphMorphism> find_isomorphisms(const TypedGraph& a, const TypedGraph& b,
                                             const NodePins& pins = {});

/// Certificate string: equal for two graphs iff they are isomorphic by an
/// isomorphism sending pinned[i] to pinned[i] for every position i.
std::string canonical_form(const TypedGraph& g, std::span<const NodeId> pinned = {});

}  // namespace zxbicat
