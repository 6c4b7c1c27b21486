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

#include "zxbicat/dpo.hpp"

#include <set>

#include "zxbicat/error.hpp"

namespace zxbicat {

void RewriteRule::validate() const {
  lhs.validate();
  rhs.validate();
  if (lhs.arity_in() != rhs.arity_in() || lhs.arity_out() != rhs.arity_out()) {
    throw Error(ErrorCode::InvalidArgument, "rule " + name + " sides have different interfaces");
  }
  if (k.edge_count() != 0) throw Error(ErrorCode::InvalidArgument, "rule apex must be edgeless");
  check_morphism(k, lhs.body, kl, "rule left leg");
  check_morphism(k, rhs.body, kr, "rule right leg");
}

RewriteRule make_rule(std::string name, OpenGraph lhs, OpenGraph rhs, RuleTag tag) {
  RewriteRule r;
  r.name = std::move(name);
  const std::size_t n = lhs.arity_in() + lhs.arity_out();
  for (std::size_t i = 0; i < n; ++i) r.k.add_node(NodeLabel::open());
  r.kl.node_map = boundary_list(lhs);
  r.kr.node_map = boundary_list(rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.tag = tag;
  r.validate();
  return r;
}

RewriteRule reversed(const RewriteRule& rule) {
  RewriteRule r = rule;
  std::swap(r.lhs, r.rhs);
  std::swap(r.kl, r.kr);
  return r;
}

namespace {

std::vector<NodeId> inverse_list(const std::vector<NodeId>& list, const GraphMorphism& include,
                                 std::size_t target_nodes) {
  std::vector<NodeId> inv(target_nodes, static_cast<NodeId>(-1));
  for (NodeId i = 0; i < include.node_map.size(); ++i) inv[include.node_map[i]] = i;
  std::vector<NodeId> out;
  for (NodeId n : list) out.push_back(inv.at(n));
  return out;
}

std::vector<NodeId> through(const std::vector<NodeId>& list, const GraphMorphism& m) {
  std::vector<NodeId> out;
  for (NodeId n : list) out.push_back(m.node_map.at(n));
  return out;
}

}  // namespace

void check_applicable(const OpenGraph& host, const Match& match) {
  const RewriteRule& r = match.rule;
  check_morphism(r.lhs.body, host.body, match.m, "match");
  if (!is_mono(match.m)) throw Error(ErrorCode::InvalidArgument, "matches must be injective");
  if (!is_mono(r.kl)) throw Error(ErrorCode::InvalidArgument, "rule " + r.name + " has a non-injective left leg");
  std::set<NodeId> kept;
  for (NodeId x : r.kl.node_map) kept.insert(match.m.node_map[x]);
  std::set<NodeId> boundary(host.inputs.begin(), host.inputs.end());
  boundary.insert(host.outputs.begin(), host.outputs.end());
  for (NodeId v : match.m.node_map) {
    if (boundary.count(v) && !kept.count(v)) {
      throw Error(ErrorCode::BoundaryViolation, "match deletes interface node " + std::to_string(v));
    }
  }
  std::set<NodeId> deleted;
  for (NodeId v : match.m.node_map) {
    if (!kept.count(v)) deleted.insert(v);
  }
  std::set<EdgeId> matched(match.m.edge_map.begin(), match.m.edge_map.end());
  for (EdgeId e = 0; e < host.body.edge_count(); ++e) {
    if (matched.count(e)) continue;
    const Edge& he = host.body.edge(e);
    if (deleted.count(he.src) || deleted.count(he.tgt)) {
      throw Error(ErrorCode::DanglingCondition, "edge " + std::to_string(e) + " would dangle");
    }
  }
}

bool is_applicable(const OpenGraph& host, const Match& match) noexcept {
  if (match.expansion_node) {
    return *match.expansion_node < host.body.node_count() && host.body.label(*match.expansion_node).is_open();
  }
  try {
    check_applicable(host, match);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<Match> find_rule_matches(const RewriteRule& rule, const OpenGraph& host, const NodePins& pins) {
  std::vector<Match> out;
  if (!is_mono(rule.kl)) return out;
  for (auto& m : find_monomorphisms(rule.lhs.body, host.body, pins)) {
    Match match{rule, std::move(m), std::nullopt};
    if (is_applicable(host, match)) out.push_back(std::move(match));
  }
  return out;
}

Rewrite apply(const OpenGraph& host, const Match& match) {
  if (match.expansion_node) return apply_wire_expansion(host, *match.expansion_node);
  check_applicable(host, match);
  const RewriteRule& r = match.rule;
  const PushoutComplement pc = pushout_complement(r.k, r.lhs.body, host.body, r.kl, match.m);
  OpenGraph context;
  context.body = pc.context;
  context.inputs = inverse_list(host.inputs, pc.context_to_host, host.body.node_count());
  context.outputs = inverse_list(host.outputs, pc.context_to_host, host.body.node_count());

  const PushoutResult po = pushout(r.k, pc.context, r.rhs.body, pc.k_to_context, r.kr);
  Rewrite out;
  out.result.body = po.apex;
  out.result.inputs = through(context.inputs, po.in_a);
  out.result.outputs = through(context.outputs, po.in_a);
  out.witness = TwoCell{host, out.result, std::move(context), pc.context_to_host, po.in_a};
  return out;
}

Rewrite apply_wire_expansion(const OpenGraph& host, NodeId node) {
  if (node >= host.body.node_count()) throw Error(ErrorCode::InvalidArgument, "node out of range");
  if (!host.body.label(node).is_open()) {
    throw Error(ErrorCode::NotOpenNode, "node " + std::to_string(node) + " is not open");
  }
  const NodeId copy = static_cast<NodeId>(host.body.node_count());
  bool first_taken = false;
  auto place = [&]() {
    if (!first_taken) {
      first_taken = true;
      return node;
    }
    return copy;
  };

  OpenGraph apex;
  apex.inputs = host.inputs;
  apex.outputs = host.outputs;
  for (NodeId& n : apex.inputs) {
    if (n == node) n = place();
  }
  std::vector<Edge> edges(host.body.edges().begin(), host.body.edges().end());
  for (Edge& e : edges) {
    if (e.tgt == node) e.tgt = place();
  }
  for (Edge& e : edges) {
    if (e.src == node) e.src = place();
  }
  for (NodeId& n : apex.outputs) {
    if (n == node) n = place();
  }
  for (const NodeLabel& l : host.body.labels()) apex.body.add_node(l);
  apex.body.add_node(NodeLabel::open());
  for (const Edge& e : edges) apex.body.add_edge(e.src, e.tgt);

  Rewrite out;
  out.result = apex;
  out.result.body.add_edge(node, copy);

  GraphMorphism down = GraphMorphism::identity(host.body);
  down.node_map.push_back(node);
  GraphMorphism up = GraphMorphism::identity(apex.body);
  out.witness = TwoCell{host, out.result, std::move(apex), std::move(down), std::move(up)};
  return out;
}

}  // namespace zxbicat
