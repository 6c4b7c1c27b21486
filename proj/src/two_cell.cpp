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

#include "zxbicat/two_cell.hpp"

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

void check_feet(const std::vector<NodeId>& apex_list, const std::vector<NodeId>& foot_list,
                const GraphMorphism& leg, const char* what) {
  if (apex_list.size() != foot_list.size()) {
    throw Error(ErrorCode::InvalidMorphism, std::string(what) + ": interface sizes differ");
  }
  for (std::size_t i = 0; i < apex_list.size(); ++i) {
    if (leg.node_map.at(apex_list[i]) != foot_list[i]) {
      throw Error(ErrorCode::InvalidMorphism,
                  std::string(what) + ": interface position " + std::to_string(i) + " does not commute");
    }
  }
}

}  // namespace

void TwoCell::validate() const {
  dom.validate();
  cod.validate();
  apex.validate();
  check_morphism(apex.body, dom.body, leg_down, "downward leg");
  check_morphism(apex.body, cod.body, leg_up, "upward leg");
  check_feet(apex.inputs, dom.inputs, leg_down, "downward leg inputs");
  check_feet(apex.outputs, dom.outputs, leg_down, "downward leg outputs");
  check_feet(apex.inputs, cod.inputs, leg_up, "upward leg inputs");
  check_feet(apex.outputs, cod.outputs, leg_up, "upward leg outputs");
}

bool TwoCell::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

TwoCell identity_2cell(const OpenGraph& f) {
  return TwoCell{f, f, f, GraphMorphism::identity(f.body), GraphMorphism::identity(f.body)};
}

TwoCell vertical_compose(const TwoCell& a, const TwoCell& b) {
  auto align = find_open_isomorphism(a.cod, b.dom);
  if (!align) throw Error(ErrorCode::MiddleMismatch, "middle 1-cells are not isomorphic");
  const GraphMorphism up = compose(a.leg_up, *align);
  const PullbackResult q = pullback(a.apex.body, b.apex.body, b.dom.body, up, b.leg_down);
  // Interface position i of both apexes lies over the same middle node, so
  // the pair is in the pullback.
  GraphMorphism in_l, in_r, out_l, out_r;
  in_l.node_map = a.apex.inputs;
  in_r.node_map = b.apex.inputs;
  out_l.node_map = a.apex.outputs;
  out_r.node_map = b.apex.outputs;
  auto ins = pullback_mediator(q, in_l, in_r);
  auto outs = pullback_mediator(q, out_l, out_r);
  if (!ins || !outs) throw Error(ErrorCode::MiddleMismatch, "feet of the two 2-cells disagree");
  TwoCell out;
  out.dom = a.dom;
  out.cod = b.cod;
  out.apex.body = q.apex;
  out.apex.inputs = ins->node_map;
  out.apex.outputs = outs->node_map;
  out.leg_down = compose(q.pr_a, a.leg_down);
  out.leg_up = compose(q.pr_b, b.leg_up);
  return out;
}

TwoCell horizontal_compose(const TwoCell& a, const TwoCell& b) {
  const Composite dom = compose_with_injections(a.dom, b.dom);
  const Composite cod = compose_with_injections(a.cod, b.cod);
  const Composite apex = compose_with_injections(a.apex, b.apex);
  auto down = pushout_mediator(apex.pushout, compose(a.leg_down, dom.pushout.in_a),
                               compose(b.leg_down, dom.pushout.in_b));
  auto up = pushout_mediator(apex.pushout, compose(a.leg_up, cod.pushout.in_a),
                             compose(b.leg_up, cod.pushout.in_b));
  if (!down || !up) throw Error(ErrorCode::InvalidMorphism, "2-cell legs do not form a cocone");
  return TwoCell{dom.result, cod.result, apex.result, *down, *up};
}

TwoCell tensor_2cells(const TwoCell& a, const TwoCell& b) {
  TwoCell out;
  out.dom = tensor(a.dom, b.dom);
  out.cod = tensor(a.cod, b.cod);
  out.apex = tensor(a.apex, b.apex);
  out.leg_down = sum_map(a.leg_down, b.leg_down, a.dom.body.node_count(), a.dom.body.edge_count());
  out.leg_up = sum_map(a.leg_up, b.leg_up, a.cod.body.node_count(), a.cod.body.edge_count());
  return out;
}

TwoCell reverse(const TwoCell& a) { return TwoCell{a.cod, a.dom, a.apex, a.leg_up, a.leg_down}; }

bool parallel_equal(const TwoCell& a, const TwoCell& b) {
  return equal_up_to_iso(a.dom, b.dom) && equal_up_to_iso(a.cod, b.cod);
}

}  // namespace zxbicat
