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

#include "zxbicat/open_graph.hpp"

#include <numeric>

#include "zxbicat/error.hpp"

namespace zxbicat {

void OpenGraph::validate() const {
  for (const auto* list : {&inputs, &outputs}) {
    for (NodeId n : *list) {
      if (n >= body.node_count()) throw Error(ErrorCode::InvalidGraph, "interface node out of range");
      if (!body.label(n).is_open()) {
        throw Error(ErrorCode::InvalidGraph, "interface node " + std::to_string(n) + " is not open");
      }
    }
  }
}

namespace {

TypedGraph edgeless_open(std::size_t n) {
  TypedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(NodeLabel::open());
  return g;
}

GraphMorphism foot(const std::vector<NodeId>& list) {
  GraphMorphism m;
  m.node_map = list;
  return m;
}

std::vector<NodeId> through(const std::vector<NodeId>& list, const GraphMorphism& m) {
  std::vector<NodeId> out;
  out.reserve(list.size());
  for (NodeId n : list) out.push_back(m.node_map.at(n));
  return out;
}

}  // namespace

Composite compose_with_injections(const OpenGraph& f, const OpenGraph& g) {
  if (f.outputs.size() != g.inputs.size()) {
    throw Error(ErrorCode::ArityMismatch, "cannot compose: " + std::to_string(f.outputs.size()) +
                                              " outputs against " + std::to_string(g.inputs.size()) +
                                              " inputs");
  }
  Composite c;
  c.pushout = pushout(edgeless_open(f.outputs.size()), f.body, g.body, foot(f.outputs), foot(g.inputs));
  c.result.body = c.pushout.apex;
  c.result.inputs = through(f.inputs, c.pushout.in_a);
  c.result.outputs = through(g.outputs, c.pushout.in_b);
  return c;
}

OpenGraph compose(const OpenGraph& f, const OpenGraph& g) { return compose_with_injections(f, g).result; }

OpenGraph tensor(const OpenGraph& f, const OpenGraph& g) {
  const Coproduct c = coproduct(f.body, g.body);
  OpenGraph out;
  out.body = c.sum;
  out.inputs = through(f.inputs, c.in_left);
  for (NodeId n : through(g.inputs, c.in_right)) out.inputs.push_back(n);
  out.outputs = through(f.outputs, c.in_left);
  for (NodeId n : through(g.outputs, c.in_right)) out.outputs.push_back(n);
  return out;
}

OpenGraph dagger(const OpenGraph& f) {
  OpenGraph out;
  for (const NodeLabel& l : f.body.labels()) out.body.add_node(l.daggered());
  for (const Edge& e : f.body.edges()) out.body.add_edge(e.tgt, e.src);
  out.inputs = f.outputs;
  out.outputs = f.inputs;
  return out;
}

OpenGraph identity(std::size_t n) {
  OpenGraph out;
  out.body = edgeless_open(n);
  out.inputs.resize(n);
  std::iota(out.inputs.begin(), out.inputs.end(), 0);
  out.outputs = out.inputs;
  return out;
}

OpenGraph twist(std::size_t m, std::size_t n) {
  OpenGraph out = identity(m + n);
  out.outputs.clear();
  for (std::size_t i = 0; i < n; ++i) out.outputs.push_back(static_cast<NodeId>(m + i));
  for (std::size_t i = 0; i < m; ++i) out.outputs.push_back(static_cast<NodeId>(i));
  return out;
}

OpenGraph evaluation(std::size_t n) {
  OpenGraph out;
  out.body = edgeless_open(n);
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t i = 0; i < n; ++i) out.inputs.push_back(static_cast<NodeId>(i));
  }
  return out;
}

OpenGraph coevaluation(std::size_t n) {
  OpenGraph out = evaluation(n);
  std::swap(out.inputs, out.outputs);
  return out;
}

NodePins interface_pins(const OpenGraph& f, const OpenGraph& g) {
  NodePins pins;
  for (std::size_t i = 0; i < f.inputs.size() && i < g.inputs.size(); ++i) pins.emplace_back(f.inputs[i], g.inputs[i]);
  for (std::size_t i = 0; i < f.outputs.size() && i < g.outputs.size(); ++i) pins.emplace_back(f.outputs[i], g.outputs[i]);
  return pins;
}

std::optional<GraphMorphism> find_open_isomorphism(const OpenGraph& f, const OpenGraph& g) {
  if (f.inputs.size() != g.inputs.size() || f.outputs.size() != g.outputs.size()) return std::nullopt;
  return find_isomorphism(f.body, g.body, interface_pins(f, g));
}

bool equal_up_to_iso(const OpenGraph& f, const OpenGraph& g) { return find_open_isomorphism(f, g).has_value(); }

std::vector<NodeId> boundary_list(const OpenGraph& f) {
  std::vector<NodeId> out = f.inputs;
  out.insert(out.end(), f.outputs.begin(), f.outputs.end());
  return out;
}

std::string canonical_key(const OpenGraph& f) {
  const auto pins = boundary_list(f);
  return std::to_string(f.inputs.size()) + "|" + std::to_string(f.outputs.size()) + "|" +
         canonical_form(f.body, pins);
}

}  // namespace zxbicat
