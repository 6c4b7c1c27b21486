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

#include "zxbicat/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

constexpr NodeId kUnset = static_cast<NodeId>(-1);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Dense edge-multiplicity matrix.
class AdjacencyCounts {
 public:
  explicit AdjacencyCounts(const TypedGraph& g) : n_(g.node_count()), counts_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) ++counts_[e.src * n_ + e.tgt];
  }
  std::uint32_t operator()(NodeId a, NodeId b) const { return counts_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> counts_;
};

std::string describe_node(NodeId n) { return "node " + std::to_string(n); }

}  // namespace

// ---------------------------------------------------------------------------
// TypedGraph

NodeId TypedGraph::add_node(const NodeLabel& label) {
  labels_.push_back(label);
  return static_cast<NodeId>(labels_.size() - 1);
}

EdgeId TypedGraph::add_edge(NodeId src, NodeId tgt) {
  if (src >= labels_.size() || tgt >= labels_.size()) {
    throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
  }
  if (!edge_permitted(labels_[src], labels_[tgt])) {
    throw Error(ErrorCode::IllegalEdge, "S_zx has no arrow " + labels_[src].token() + " -> " +
                                            labels_[tgt].token());
  }
  edges_.push_back(Edge{src, tgt});
  return static_cast<EdgeId>(edges_.size() - 1);
}

void TypedGraph::set_label(NodeId n, const NodeLabel& label) {
  labels_.at(n) = label;
  for (const Edge& e : edges_) {
    if ((e.src == n || e.tgt == n) && !edge_permitted(labels_[e.src], labels_[e.tgt])) {
      throw Error(ErrorCode::IllegalEdge, "relabeling " + describe_node(n) + " breaks typing");
    }
  }
}

std::size_t TypedGraph::degree(NodeId n) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.src == n) + (e.tgt == n);
  return d;
}

std::vector<EdgeId> TypedGraph::incident_edges(NodeId n) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].src == n || edges_[e].tgt == n) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms

GraphMorphism GraphMorphism::identity(const TypedGraph& g) {
  GraphMorphism m;
  m.node_map.resize(g.node_count());
  m.edge_map.resize(g.edge_count());
  std::iota(m.node_map.begin(), m.node_map.end(), 0);
  std::iota(m.edge_map.begin(), m.edge_map.end(), 0);
  return m;
}

namespace {

std::optional<std::string> morphism_violation(const TypedGraph& src, const TypedGraph& tgt,
                                              const GraphMorphism& m) {
  if (m.node_map.size() != src.node_count()) return "node map is not total";
  if (m.edge_map.size() != src.edge_count()) return "edge map is not total";
  for (NodeId n = 0; n < src.node_count(); ++n) {
    if (m.node_map[n] >= tgt.node_count()) return describe_node(n) + " maps out of range";
    if (src.label(n) != tgt.label(m.node_map[n])) {
      return describe_node(n) + " label " + src.label(n).token() + " not preserved";
    }
  }
  for (EdgeId e = 0; e < src.edge_count(); ++e) {
    if (m.edge_map[e] >= tgt.edge_count()) return "edge " + std::to_string(e) + " maps out of range";
    const Edge& se = src.edge(e);
    const Edge& te = tgt.edge(m.edge_map[e]);
    if (m.node_map[se.src] != te.src || m.node_map[se.tgt] != te.tgt) {
      return "edge " + std::to_string(e) + " endpoints not preserved";
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_morphism(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m) {
  return !morphism_violation(src, tgt, m).has_value();
}

void check_morphism(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m,
                    const char* what) {
  if (auto v = morphism_violation(src, tgt, m)) {
    throw Error(ErrorCode::InvalidMorphism, std::string(what) + ": " + *v);
  }
}

bool is_mono(const GraphMorphism& m) {
  std::set<NodeId> nodes(m.node_map.begin(), m.node_map.end());
  std::set<EdgeId> edges(m.edge_map.begin(), m.edge_map.end());
  return nodes.size() == m.node_map.size() && edges.size() == m.edge_map.size();
}

bool is_iso(const TypedGraph& src, const TypedGraph& tgt, const GraphMorphism& m) {
  return is_morphism(src, tgt, m) && is_mono(m) && src.node_count() == tgt.node_count() &&
         src.edge_count() == tgt.edge_count();
}

GraphMorphism compose(const GraphMorphism& first, const GraphMorphism& second) {
  GraphMorphism out;
  out.node_map.reserve(first.node_map.size());
  out.edge_map.reserve(first.edge_map.size());
  for (NodeId n : first.node_map) out.node_map.push_back(second.node_map.at(n));
  for (EdgeId e : first.edge_map) out.edge_map.push_back(second.edge_map.at(e));
  return out;
}

GraphMorphism invert(const GraphMorphism& iso) {
  GraphMorphism out;
  out.node_map.assign(iso.node_map.size(), kUnset);
  out.edge_map.assign(iso.edge_map.size(), kUnset);
  for (NodeId n = 0; n < iso.node_map.size(); ++n) out.node_map.at(iso.node_map[n]) = n;
  for (EdgeId e = 0; e < iso.edge_map.size(); ++e) out.edge_map.at(iso.edge_map[e]) = e;
  return out;
}

Coproduct coproduct(const TypedGraph& a, const TypedGraph& b) {
  Coproduct c;
  for (const NodeLabel& l : a.labels()) c.in_left.node_map.push_back(c.sum.add_node(l));
  for (const NodeLabel& l : b.labels()) c.in_right.node_map.push_back(c.sum.add_node(l));
  for (const Edge& e : a.edges()) {
    c.in_left.edge_map.push_back(c.sum.add_edge(c.in_left.node_map[e.src], c.in_left.node_map[e.tgt]));
  }
  for (const Edge& e : b.edges()) {
    c.in_right.edge_map.push_back(
        c.sum.add_edge(c.in_right.node_map[e.src], c.in_right.node_map[e.tgt]));
  }
  return c;
}

GraphMorphism copair(const Coproduct& c, const GraphMorphism& f, const GraphMorphism& g) {
  GraphMorphism out;
  out.node_map.assign(c.sum.node_count(), kUnset);
  out.edge_map.assign(c.sum.edge_count(), kUnset);
  for (NodeId n = 0; n < c.in_left.node_map.size(); ++n) out.node_map[c.in_left.node_map[n]] = f.node_map.at(n);
  for (NodeId n = 0; n < c.in_right.node_map.size(); ++n) out.node_map[c.in_right.node_map[n]] = g.node_map.at(n);
  for (EdgeId e = 0; e < c.in_left.edge_map.size(); ++e) out.edge_map[c.in_left.edge_map[e]] = f.edge_map.at(e);
  for (EdgeId e = 0; e < c.in_right.edge_map.size(); ++e) out.edge_map[c.in_right.edge_map[e]] = g.edge_map.at(e);
  return out;
}

GraphMorphism sum_map(const GraphMorphism& f, const GraphMorphism& g, std::size_t left_target_nodes,
                      std::size_t left_target_edges) {
  GraphMorphism out = f;
  for (NodeId n : g.node_map) out.node_map.push_back(static_cast<NodeId>(n + left_target_nodes));
  for (EdgeId e : g.edge_map) out.edge_map.push_back(static_cast<EdgeId>(e + left_target_edges));
  return out;
}

// ---------------------------------------------------------------------------
// Pushout / pullback

PushoutResult pushout(const TypedGraph& k, const TypedGraph& a, const TypedGraph& b,
                      const GraphMorphism& left, const GraphMorphism& right) {
  check_morphism(k, a, left, "pushout left leg");
  check_morphism(k, b, right, "pushout right leg");
  const std::size_t na = a.node_count();
  const std::size_t ea = a.edge_count();

  UnionFind nodes(na + b.node_count());
  UnionFind edges(ea + b.edge_count());
  for (NodeId x = 0; x < k.node_count(); ++x) nodes.unite(left.node_map[x], na + right.node_map[x]);
  for (EdgeId x = 0; x < k.edge_count(); ++x) edges.unite(left.edge_map[x], ea + right.edge_map[x]);

  auto node_label = [&](std::size_t i) -> const NodeLabel& {
    return i < na ? a.label(static_cast<NodeId>(i)) : b.label(static_cast<NodeId>(i - na));
  };
  auto edge_at = [&](std::size_t i) -> Edge {
    if (i < ea) return a.edge(static_cast<EdgeId>(i));
    Edge e = b.edge(static_cast<EdgeId>(i - ea));
    return Edge{static_cast<NodeId>(e.src + na), static_cast<NodeId>(e.tgt + na)};
  };

  PushoutResult out;
  std::vector<NodeId> class_id(na + b.node_count(), kUnset);
  std::vector<NodeId> node_of(na + b.node_count());
  for (std::size_t i = 0; i < node_of.size(); ++i) {
    const std::size_t r = nodes.find(i);
    if (class_id[r] == kUnset) {
      class_id[r] = out.apex.add_node(node_label(i));
    } else if (out.apex.label(class_id[r]) != node_label(i)) {
      throw Error(ErrorCode::LabelClash, "pushout identifies " + out.apex.label(class_id[r]).token() +
                                             " with " + node_label(i).token());
    }
    node_of[i] = class_id[r];
  }
  std::vector<EdgeId> edge_class(ea + b.edge_count(), kUnset);
  std::vector<EdgeId> edge_of(ea + b.edge_count());
  for (std::size_t i = 0; i < edge_of.size(); ++i) {
    const std::size_t r = edges.find(i);
    if (edge_class[r] == kUnset) {
      const Edge e = edge_at(i);
      edge_class[r] = out.apex.add_edge(node_of[e.src], node_of[e.tgt]);
    }
    edge_of[i] = edge_class[r];
  }
  out.in_a.node_map.assign(node_of.begin(), node_of.begin() + static_cast<std::ptrdiff_t>(na));
  out.in_b.node_map.assign(node_of.begin() + static_cast<std::ptrdiff_t>(na), node_of.end());
  out.in_a.edge_map.assign(edge_of.begin(), edge_of.begin() + static_cast<std::ptrdiff_t>(ea));
  out.in_b.edge_map.assign(edge_of.begin() + static_cast<std::ptrdiff_t>(ea), edge_of.end());
  return out;
}

std::optional<GraphMorphism> pushout_mediator(const PushoutResult& p, const GraphMorphism& f,
                                              const GraphMorphism& g) {
  if (f.node_map.size() != p.in_a.node_map.size() || g.node_map.size() != p.in_b.node_map.size() ||
      f.edge_map.size() != p.in_a.edge_map.size() || g.edge_map.size() != p.in_b.edge_map.size()) {
    return std::nullopt;
  }
  GraphMorphism u;
  u.node_map.assign(p.apex.node_count(), kUnset);
  u.edge_map.assign(p.apex.edge_count(), kUnset);
  auto assign = [](std::vector<NodeId>& slot, const std::vector<NodeId>& in, const std::vector<NodeId>& val) {
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (slot[in[i]] == kUnset) {
        slot[in[i]] = val[i];
      } else if (slot[in[i]] != val[i]) {
        return false;
      }
    }
    return true;
  };
  if (!assign(u.node_map, p.in_a.node_map, f.node_map) || !assign(u.node_map, p.in_b.node_map, g.node_map) ||
      !assign(u.edge_map, p.in_a.edge_map, f.edge_map) || !assign(u.edge_map, p.in_b.edge_map, g.edge_map)) {
    return std::nullopt;
  }
  return u;
}

PullbackResult pullback(const TypedGraph& a, const TypedGraph& b, const TypedGraph& c,
                        const GraphMorphism& left, const GraphMorphism& right) {
  check_morphism(a, c, left, "pullback left leg");
  check_morphism(b, c, right, "pullback right leg");
  std::vector<std::vector<NodeId>> over_node(c.node_count());
  for (NodeId y = 0; y < b.node_count(); ++y) over_node[right.node_map[y]].push_back(y);
  std::vector<std::vector<EdgeId>> over_edge(c.edge_count());
  for (EdgeId y = 0; y < b.edge_count(); ++y) over_edge[right.edge_map[y]].push_back(y);

  PullbackResult out;
  std::map<std::pair<NodeId, NodeId>, NodeId> index;
  for (NodeId x = 0; x < a.node_count(); ++x) {
    for (NodeId y : over_node[left.node_map[x]]) {
      const NodeId id = out.apex.add_node(a.label(x));
      index.emplace(std::pair{x, y}, id);
      out.pr_a.node_map.push_back(x);
      out.pr_b.node_map.push_back(y);
    }
  }
  for (EdgeId x = 0; x < a.edge_count(); ++x) {
    for (EdgeId y : over_edge[left.edge_map[x]]) {
      const Edge& ex = a.edge(x);
      const Edge& ey = b.edge(y);
      out.apex.add_edge(index.at({ex.src, ey.src}), index.at({ex.tgt, ey.tgt}));
      out.pr_a.edge_map.push_back(x);
      out.pr_b.edge_map.push_back(y);
    }
  }
  return out;
}

std::optional<GraphMorphism> pullback_mediator(const PullbackResult& p, const GraphMorphism& f,
                                               const GraphMorphism& g) {
  if (f.node_map.size() != g.node_map.size() || f.edge_map.size() != g.edge_map.size()) return std::nullopt;
  std::map<std::pair<NodeId, NodeId>, NodeId> nodes;
  for (NodeId i = 0; i < p.pr_a.node_map.size(); ++i) nodes.emplace(std::pair{p.pr_a.node_map[i], p.pr_b.node_map[i]}, i);
  std::map<std::pair<EdgeId, EdgeId>, EdgeId> edges;
  for (EdgeId i = 0; i < p.pr_a.edge_map.size(); ++i) edges.emplace(std::pair{p.pr_a.edge_map[i], p.pr_b.edge_map[i]}, i);
  GraphMorphism u;
  for (std::size_t z = 0; z < f.node_map.size(); ++z) {
    auto it = nodes.find({f.node_map[z], g.node_map[z]});
    if (it == nodes.end()) return std::nullopt;
    u.node_map.push_back(it->second);
  }
  for (std::size_t z = 0; z < f.edge_map.size(); ++z) {
    auto it = edges.find({f.edge_map[z], g.edge_map[z]});
    if (it == edges.end()) return std::nullopt;
    u.edge_map.push_back(it->second);
  }
  return u;
}

// ---------------------------------------------------------------------------
// Pushout complement

PushoutComplement pushout_complement(const TypedGraph& k, const TypedGraph& l_graph,
                                     const TypedGraph& g, const GraphMorphism& l,
                                     const GraphMorphism& m) {
  check_morphism(k, l_graph, l, "rule left leg");
  check_morphism(l_graph, g, m, "match");
  if (!is_mono(l)) throw Error(ErrorCode::InvalidArgument, "pushout complement needs a mono rule leg");
  if (!is_mono(m)) throw Error(ErrorCode::InvalidArgument, "pushout complement needs a mono match");

  std::vector<char> keep_l_node(l_graph.node_count(), 0);
  std::vector<char> keep_l_edge(l_graph.edge_count(), 0);
  for (NodeId n : l.node_map) keep_l_node[n] = 1;
  for (EdgeId e : l.edge_map) keep_l_edge[e] = 1;

  std::vector<char> deleted_node(g.node_count(), 0);
  std::vector<char> deleted_edge(g.edge_count(), 0);
  std::vector<char> in_match_edge(g.edge_count(), 0);
  for (NodeId n = 0; n < l_graph.node_count(); ++n) {
    if (!keep_l_node[n]) deleted_node[m.node_map[n]] = 1;
  }
  for (EdgeId e = 0; e < l_graph.edge_count(); ++e) {
    in_match_edge[m.edge_map[e]] = 1;
    if (!keep_l_edge[e]) deleted_edge[m.edge_map[e]] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_match_edge[e]) continue;
    const Edge& ge = g.edge(e);
    if (deleted_node[ge.src] || deleted_node[ge.tgt]) {
      throw Error(ErrorCode::DanglingCondition,
                  "edge " + std::to_string(e) + " would dangle after deleting its endpoint");
    }
  }

  PushoutComplement out;
  std::vector<NodeId> new_id(g.node_count(), kUnset);
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (deleted_node[n]) continue;
    new_id[n] = out.context.add_node(g.label(n));
    out.context_to_host.node_map.push_back(n);
  }
  std::vector<EdgeId> new_edge(g.edge_count(), kUnset);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (deleted_edge[e]) continue;
    const Edge& ge = g.edge(e);
    new_edge[e] = out.context.add_edge(new_id[ge.src], new_id[ge.tgt]);
    out.context_to_host.edge_map.push_back(e);
  }
  for (NodeId x = 0; x < k.node_count(); ++x) out.k_to_context.node_map.push_back(new_id[m.node_map[l.node_map[x]]]);
  for (EdgeId x = 0; x < k.edge_count(); ++x) out.k_to_context.edge_map.push_back(new_edge[m.edge_map[l.edge_map[x]]]);
  return out;
}

// ---------------------------------------------------------------------------
// Match search

namespace {

class MonoSearch {
 public:
  MonoSearch(const TypedGraph& pattern, const TypedGraph& host,
             std::vector<std::vector<NodeId>> candidates, std::vector<NodeId> order, bool bijective,
             std::size_t limit)
      : p_(pattern),
        h_(host),
        pc_(pattern),
        hc_(host),
        candidates_(std::move(candidates)),
        order_(std::move(order)),
        bijective_(bijective),
        limit_(limit),
        assign_(pattern.node_count(), kUnset),
        used_(host.node_count(), 0) {
    for (EdgeId e = 0; e < host.edge_count(); ++e) host_edges_[{host.edge(e).src, host.edge(e).tgt}].push_back(e);
  }

  std::vector<GraphMorphism> run() {
    extend_nodes(0);
    return std::move(results_);
  }

 private:
  bool done() const { return limit_ != 0 && results_.size() >= limit_; }

  bool consistent(NodeId u, NodeId x) const {
    for (std::size_t i = 0; i <= depth_; ++i) {
      const NodeId v = i < depth_ ? order_[i] : u;
      const NodeId y = i < depth_ ? assign_[v] : x;
      if (bijective_) {
        if (pc_(u, v) != hc_(x, y) || pc_(v, u) != hc_(y, x)) return false;
      } else {
        if (pc_(u, v) > hc_(x, y) || pc_(v, u) > hc_(y, x)) return false;
      }
    }
    return true;
  }

  void extend_nodes(std::size_t pos) {
    if (done()) return;
    if (pos == order_.size()) {
      current_edges_.assign(p_.edge_count(), kUnset);
      edge_used_.assign(h_.edge_count(), 0);
      extend_edges(0);
      return;
    }
    const NodeId u = order_[pos];
    depth_ = pos;
    for (NodeId x : candidates_[u]) {
      if (used_[x] || !consistent(u, x)) continue;
      assign_[u] = x;
      used_[x] = 1;
      extend_nodes(pos + 1);
      used_[x] = 0;
      assign_[u] = kUnset;
      depth_ = pos;
      if (done()) return;
    }
  }

  void extend_edges(EdgeId e) {
    if (done()) return;
    if (e == p_.edge_count()) {
      GraphMorphism m;
      m.node_map = assign_;
      m.edge_map = current_edges_;
      results_.push_back(std::move(m));
      return;
    }
    const Edge& pe = p_.edge(e);
    auto it = host_edges_.find({assign_[pe.src], assign_[pe.tgt]});
    if (it == host_edges_.end()) return;
    for (EdgeId he : it->second) {
      if (edge_used_[he]) continue;
      edge_used_[he] = 1;
      current_edges_[e] = he;
      extend_edges(e + 1);
      edge_used_[he] = 0;
      if (done()) return;
    }
  }

  const TypedGraph& p_;
  const TypedGraph& h_;
  AdjacencyCounts pc_;
  AdjacencyCounts hc_;
  std::vector<std::vector<NodeId>> candidates_;
  std::vector<NodeId> order_;
  bool bijective_;
  std::size_t limit_;
  std::map<std::pair<NodeId, NodeId>, std::vector<EdgeId>> host_edges_;
  std::vector<NodeId> assign_;
  std::vector<char> used_;
  std::size_t depth_ = 0;
  std::vector<EdgeId> current_edges_;
  std::vector<char> edge_used_;
  std::vector<GraphMorphism> results_;
};

struct DegreeProfile {
  std::uint32_t out = 0;
  std::uint32_t in = 0;
  std::uint32_t loops = 0;
};

std::vector<DegreeProfile> degree_profiles(const TypedGraph& g) {
  std::vector<DegreeProfile> d(g.node_count());
  for (const Edge& e : g.edges()) {
    if (e.src == e.tgt) {
      ++d[e.src].loops;
    } else {
      ++d[e.src].out;
      ++d[e.tgt].in;
    }
  }
  return d;
}

// Returns the pin map indexed by source node, or nullopt if pins conflict.
std::optional<std::vector<NodeId>> pin_table(const NodePins& pins, std::size_t source_nodes,
                                             std::size_t target_nodes) {
  std::vector<NodeId> table(source_nodes, kUnset);
  std::map<NodeId, NodeId> reverse;
  for (auto [s, t] : pins) {
    if (s >= source_nodes || t >= target_nodes) return std::nullopt;
    if (table[s] != kUnset && table[s] != t) return std::nullopt;
    auto [it, inserted] = reverse.emplace(t, s);
    if (!inserted && it->second != s) return std::nullopt;
    table[s] = t;
  }
  return table;
}

// Colour refinement: splits classes by the multiset of neighbour colours
// until stable. Colours are ranks of sorted signatures, hence invariant
// under renumbering.
std::vector<std::uint32_t> refine(const TypedGraph& g, std::vector<std::uint32_t> colors) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> out(n), in(n);
  for (const Edge& e : g.edges()) {
    out[e.src].push_back(e.tgt);
    in[e.tgt].push_back(e.src);
  }
  std::size_t classes = std::set<std::uint32_t>(colors.begin(), colors.end()).size();
  while (true) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (NodeId v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.push_back(colors[v]);
      std::vector<std::uint32_t> o, i;
      for (NodeId w : out[v]) o.push_back(colors[w]);
      for (NodeId w : in[v]) i.push_back(colors[w]);
      std::sort(o.begin(), o.end());
      std::sort(i.begin(), i.end());
      s.push_back(static_cast<std::uint32_t>(o.size()));
      s.insert(s.end(), o.begin(), o.end());
      s.push_back(static_cast<std::uint32_t>(i.size()));
      s.insert(s.end(), i.begin(), i.end());
    }
    std::vector<std::vector<std::uint32_t>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (NodeId v = 0; v < n; ++v) {
      colors[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) return colors;
    classes = distinct.size();
  }
}

// Initial colouring: pinned nodes by first pin position, the rest by label.
std::vector<std::uint32_t> initial_colors(const TypedGraph& g, const std::vector<NodeId>& pin_rank,
                                          std::uint32_t pin_classes,
                                          const std::vector<NodeLabel>& label_order) {
  std::vector<std::uint32_t> c(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (pin_rank[v] != kUnset) {
      c[v] = pin_rank[v];
    } else {
      c[v] = pin_classes + static_cast<std::uint32_t>(
                               std::lower_bound(label_order.begin(), label_order.end(), g.label(v)) -
                               label_order.begin());
    }
  }
  return c;
}

std::vector<NodeLabel> sorted_labels(std::span<const NodeLabel> a, std::span<const NodeLabel> b = {}) {
  std::vector<NodeLabel> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<GraphMorphism> find_monomorphisms(const TypedGraph& pattern, const TypedGraph& host,
                                              const NodePins& pins, std::size_t limit) {
  auto table = pin_table(pins, pattern.node_count(), host.node_count());
  if (!table) return {};
  const auto pd = degree_profiles(pattern);
  const auto hd = degree_profiles(host);
  std::vector<std::vector<NodeId>> candidates(pattern.node_count());
  for (NodeId u = 0; u < pattern.node_count(); ++u) {
    for (NodeId x = 0; x < host.node_count(); ++x) {
      if ((*table)[u] != kUnset && (*table)[u] != x) continue;
      if (pattern.label(u) != host.label(x)) continue;
      if (pd[u].out > hd[x].out || pd[u].in > hd[x].in || pd[u].loops > hd[x].loops) continue;
      candidates[u].push_back(x);
    }
    if (candidates[u].empty()) return {};
  }
  std::vector<NodeId> order(pattern.node_count());
  std::iota(order.begin(), order.end(), 0);
  return MonoSearch(pattern, host, std::move(candidates), std::move(order), false, limit).run();
}

namespace {

std::vector<GraphMorphism> iso_search(const TypedGraph& a, const TypedGraph& b, const NodePins& pins,
                                      std::size_t limit) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return {};
  auto table = pin_table(pins, a.node_count(), b.node_count());
  if (!table) return {};

  // Refine the disjoint union so colours are comparable across a and b.
  const Coproduct u = coproduct(a, b);
  std::vector<NodeId> pin_rank(u.sum.node_count(), kUnset);
  std::uint32_t next = 0;
  for (NodeId s = 0; s < a.node_count(); ++s) {
    if ((*table)[s] == kUnset) continue;
    pin_rank[u.in_left.node_map[s]] = next;
    pin_rank[u.in_right.node_map[(*table)[s]]] = next;
    ++next;
  }
  const auto labels = sorted_labels(a.labels(), b.labels());
  const auto colors = refine(u.sum, initial_colors(u.sum, pin_rank, next, labels));

  std::map<std::uint32_t, int> balance;
  for (NodeId s = 0; s < a.node_count(); ++s) ++balance[colors[u.in_left.node_map[s]]];
  for (NodeId t = 0; t < b.node_count(); ++t) --balance[colors[u.in_right.node_map[t]]];
  for (auto [c, k] : balance) {
    if (k != 0) return {};
  }

  std::vector<std::vector<NodeId>> candidates(a.node_count());
  for (NodeId s = 0; s < a.node_count(); ++s) {
    for (NodeId t = 0; t < b.node_count(); ++t) {
      if (colors[u.in_left.node_map[s]] == colors[u.in_right.node_map[t]]) candidates[s].push_back(t);
    }
  }
  // Most constrained first; ties by id.
  std::vector<NodeId> order(a.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    return candidates[x].size() < candidates[y].size();
  });
  return MonoSearch(a, b, std::move(candidates), std::move(order), true, limit).run();
}

}  // namespace

std::optional<GraphMorphism> find_isomorphism(const TypedGraph& a, const TypedGraph& b,
                                              const NodePins& pins) {
  auto found = iso_search(a, b, pins, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<GraphMorphism> find_isomorphisms(const TypedGraph& a, const TypedGraph& b,
                                             const NodePins& pins) {
  auto found = iso_search(a, b, pins, 0);
  std::sort(found.begin(), found.end(), [](const GraphMorphism& x, const GraphMorphism& y) {
    return std::tie(x.node_map, x.edge_map) < std::tie(y.node_map, y.edge_map);
  });
  return found;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const TypedGraph& g, std::span<const NodeId> pinned)
      : g_(g), counts_(g), pinned_(pinned.begin(), pinned.end()) {}

  std::string run() {
    std::vector<NodeId> pin_rank(g_.node_count(), kUnset);
    std::uint32_t next = 0;
    for (NodeId v : pinned_) {
      if (v >= g_.node_count()) throw Error(ErrorCode::InvalidArgument, "pinned node out of range");
      if (pin_rank[v] == kUnset) pin_rank[v] = next++;
    }
    search(initial_colors(g_, pin_rank, next, sorted_labels(g_.labels())));
    return *best_;
  }

 private:
  bool twins(NodeId v, NodeId w) const {
    if (counts_(v, v) != counts_(w, w) || counts_(v, w) != counts_(w, v)) return false;
    for (NodeId x = 0; x < g_.node_count(); ++x) {
      if (x == v || x == w) continue;
      if (counts_(v, x) != counts_(w, x) || counts_(x, v) != counts_(x, w)) return false;
    }
    return true;
  }

  void search(std::vector<std::uint32_t> colors) {
    colors = refine(g_, std::move(colors));
    std::map<std::uint32_t, std::vector<NodeId>> cells;
    for (NodeId v = 0; v < g_.node_count(); ++v) cells[colors[v]].push_back(v);
    const std::vector<NodeId>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1) {
        target = &members;
        break;
      }
    }
    if (target == nullptr) {
      std::string enc = encode(colors);
      if (!best_ || enc < *best_) best_ = std::move(enc);
      return;
    }
    std::vector<NodeId> tried;
    for (NodeId v : *target) {
      if (std::any_of(tried.begin(), tried.end(), [&](NodeId w) { return twins(v, w); })) continue;
      tried.push_back(v);
      std::vector<std::uint32_t> next(colors.size());
      for (NodeId w = 0; w < colors.size(); ++w) next[w] = 2 * colors[w] + 1;
      next[v] -= 1;
      search(std::move(next));
    }
  }

  // Colours are a discrete ranking here, i.e. a permutation.
  std::string encode(const std::vector<std::uint32_t>& pos) const {
    const std::size_t n = g_.node_count();
    std::vector<NodeId> at(n);
    for (NodeId v = 0; v < n; ++v) at[pos[v]] = v;
    std::ostringstream os;
    os << n << ':';
    for (NodeId i = 0; i < n; ++i) os << g_.label(at[i]).token() << ',';
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (const Edge& e : g_.edges()) es.emplace_back(pos[e.src], pos[e.tgt]);
    std::sort(es.begin(), es.end());
    os << '|';
    for (auto [s, t] : es) os << s << '>' << t << ',';
    os << '|';
    for (NodeId v : pinned_) os << pos[v] << ',';
    return os.str();
  }

  const TypedGraph& g_;
  AdjacencyCounts counts_;
  std::vector<NodeId> pinned_;
  std::optional<std::string> best_;
};

}  // namespace

std::string canonical_form(const TypedGraph& g, std::span<const NodeId> pinned) {
  return Canonicalizer(g, pinned).run();
}

}  // namespace zxbicat
