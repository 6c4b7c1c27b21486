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

#include "doctest.h"
#include "zxbicat/error.hpp"
#include "zxbicat/laws.hpp"
#include "zxbicat/zx_rules.hpp"

using namespace zxbicat;

namespace {

OpenGraph green(Phase p) { return spider(LabelKind::Green, 1, 1, p); }

Rewrite first(const std::string& rule, const OpenGraph& host) {
  const auto ms = RuleSet::standard().matches(rule, host);
  REQUIRE_FALSE(ms.empty());
  return apply(host, ms.front());
}

TwoCell wire_cell() { return first("wire", generator(GeneratorKind::Wire, 1, 1)).witness; }

}  // namespace

TEST_CASE("identity and reverse") {
  const OpenGraph f = green(Phase(1, 3));
  const TwoCell id = identity_2cell(f);
  CHECK_NOTHROW(id.validate());
  const TwoCell r = reverse(id);
  CHECK(r.dom == id.dom);
  CHECK(r.cod == id.cod);
  CHECK(r.leg_down == id.leg_down);

  const TwoCell a = wire_cell();
  const TwoCell rr = reverse(reverse(a));
  CHECK(rr.dom == a.dom);
  CHECK(rr.cod == a.cod);
  CHECK(rr.leg_down == a.leg_down);
  CHECK(rr.leg_up == a.leg_up);
  CHECK(parallel_equal(a, a));
  CHECK_FALSE(parallel_equal(a, reverse(a)));
  CHECK(parallel_equal(id, reverse(id)));
}

TEST_CASE("vertical composition") {
  const OpenGraph host = compose(compose(green(Phase(1, 3)), green(Phase(1, 4))), green(Phase(1, 6)));
  const Rewrite s1 = first("spider", host);
  const Rewrite s2 = first("spider", s1.result);

  const TwoCell unit_left = vertical_compose(identity_2cell(host), s1.witness);
  const TwoCell unit_right = vertical_compose(s1.witness, identity_2cell(s1.result));
  CHECK(parallel_equal(unit_left, s1.witness));
  CHECK(parallel_equal(unit_right, s1.witness));

  const TwoCell both = vertical_compose(s1.witness, s2.witness);
  CHECK_NOTHROW(both.validate());
  CHECK(equal_up_to_iso(both.dom, host));
  CHECK(equal_up_to_iso(both.cod, spider(LabelKind::Green, 1, 1, Phase(3, 4))));
  // Each fusion keeps only what it does not touch; the pullback of the two
  // contexts over the middle diagram is the pair of boundary nodes.
  CHECK(both.apex.body.node_count() == 2);
  CHECK(both.apex.body.edge_count() == 0);
  CHECK(both.apex.body.label(0).is_open());
  CHECK(both.apex.body.label(1).is_open());

  const TwoCell loop = vertical_compose(s1.witness, reverse(s1.witness));
  CHECK_NOTHROW(loop.validate());
  CHECK(parallel_equal(loop, identity_2cell(host)));

  CHECK_THROWS_AS(vertical_compose(s2.witness, s1.witness), Error);
  try {
    vertical_compose(s2.witness, s1.witness);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MiddleMismatch);
  }
}

TEST_CASE("vertical composition aligns isomorphic middles") {
  const OpenGraph host = compose(green(Phase(1, 3)), green(Phase(1, 4)));
  const Rewrite s = first("spider", host);
  // Rebuild the middle with permuted ids.
  OpenGraph middle = s.result;
  std::mt19937_64 rng(9);
  TypedGraph permuted;
  std::vector<NodeId> order(middle.body.node_count());
  for (NodeId i = 0; i < order.size(); ++i) order[i] = static_cast<NodeId>(order.size() - 1 - i);
  std::vector<NodeId> where(order.size());
  for (NodeId i = 0; i < order.size(); ++i) {
    permuted.add_node(middle.body.label(order[i]));
    where[order[i]] = i;
  }
  for (const Edge& e : middle.body.edges()) permuted.add_edge(where[e.src], where[e.tgt]);
  OpenGraph renamed{permuted, {}, {}};
  for (NodeId v : middle.inputs) renamed.inputs.push_back(where[v]);
  for (NodeId v : middle.outputs) renamed.outputs.push_back(where[v]);
  REQUIRE(equal_up_to_iso(renamed, middle));
  REQUIRE_FALSE(renamed == middle);
  const TwoCell c = vertical_compose(s.witness, identity_2cell(renamed));
  CHECK_NOTHROW(c.validate());
  CHECK(parallel_equal(c, s.witness));
}

TEST_CASE("horizontal composition") {
  const TwoCell w = wire_cell();
  const TwoCell two = horizontal_compose(w, w);
  CHECK_NOTHROW(two.validate());
  CHECK(equal_up_to_iso(two.dom, compose(w.dom, w.dom)));
  CHECK(equal_up_to_iso(two.cod, identity(1)));
  CHECK(two.dom.body.edge_count() == 2);

  const OpenGraph f = green(Phase(1, 2));
  const TwoCell whisker = horizontal_compose(identity_2cell(f), w);
  CHECK_NOTHROW(whisker.validate());
  CHECK(equal_up_to_iso(whisker.dom, compose(f, w.dom)));
  CHECK(equal_up_to_iso(whisker.cod, f));

  const TwoCell id2 = identity_2cell(identity(2));
  CHECK_THROWS_AS(horizontal_compose(w, id2), Error);
}

TEST_CASE("monoidal product of 2-cells") {
  const TwoCell w = wire_cell();
  const TwoCell empty = identity_2cell(identity(0));
  const TwoCell t = tensor_2cells(w, empty);
  CHECK(t.dom == w.dom);
  CHECK(t.cod == w.cod);
  CHECK(t.apex == w.apex);
  const TwoCell s = first("spider", compose(green(Phase(1, 3)), green(Phase(1, 4)))).witness;
  const TwoCell ws = tensor_2cells(w, s);
  CHECK_NOTHROW(ws.validate());
  CHECK(equal_up_to_iso(ws.dom, tensor(w.dom, s.dom)));
  CHECK(equal_up_to_iso(ws.cod, tensor(w.cod, s.cod)));
}

TEST_CASE("interchange on a hand-built wire quadruple") {
  // a, b act on the first wire strand; a', b' on the second.
  const OpenGraph strand = compose(generator(GeneratorKind::Wire, 1, 1), generator(GeneratorKind::Wire, 1, 1));
  const TwoCell a = first("wire", strand).witness;
  const TwoCell b = first("wire", a.cod).witness;
  const TwoCell lhs = horizontal_compose(vertical_compose(a, b), vertical_compose(a, b));
  const TwoCell rhs = vertical_compose(horizontal_compose(a, a), horizontal_compose(b, b));
  CHECK_NOTHROW(lhs.validate());
  CHECK_NOTHROW(rhs.validate());
  CHECK(parallel_equal(lhs, rhs));
  CHECK(equal_up_to_iso(lhs.cod, identity(1)));
  CHECK(lhs.dom.body.edge_count() == 4);
}

TEST_CASE("validation rejects broken legs") {
  TwoCell w = wire_cell();
  w.leg_up.node_map[0] = 5;
  CHECK_FALSE(w.is_valid());
  TwoCell v = wire_cell();
  std::swap(v.apex.inputs, v.apex.outputs);
  CHECK_FALSE(v.is_valid());
}
