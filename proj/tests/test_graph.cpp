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

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zxbicat/error.hpp"
#include "zxbicat/graph.hpp"

using namespace zxbicat;

namespace {

TypedGraph open_nodes(std::size_t n) {
  TypedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(NodeLabel::open());
  return g;
}

TypedGraph path(std::size_t n) {
  TypedGraph g = open_nodes(n);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

GraphMorphism node_only(std::vector<NodeId> nodes) {
  GraphMorphism m;
  m.node_map = std::move(nodes);
  return m;
}

// Checks the pushout square against every cocone into small candidates.
void check_pushout_universal(oracle::GraphGen& gen, const TypedGraph& k, const TypedGraph& a,
                             const TypedGraph& b, const GraphMorphism& l, const GraphMorphism& r,
                             int candidates) {
  const PushoutResult p = pushout(k, a, b, l, r);
  REQUIRE(is_morphism(a, p.apex, p.in_a));
  REQUIRE(is_morphism(b, p.apex, p.in_b));
  CHECK(compose(l, p.in_a) == compose(r, p.in_b));
  for (int c = 0; c < candidates; ++c) {
    const TypedGraph t = gen.graph(4, 4);
    const auto fs = oracle::all_morphisms(a, t);
    const auto gs = oracle::all_morphisms(b, t);
    for (const auto& f : fs) {
      for (const auto& g : gs) {
        const bool cocone = compose(l, f) == compose(r, g);
        if (!cocone) continue;
        CHECK(oracle::count_pushout_mediators(p.apex, p.in_a, p.in_b, t, f, g) == 1);
        auto u = pushout_mediator(p, f, g);
        REQUIRE(u.has_value());
        CHECK(is_morphism(p.apex, t, *u));
      }
    }
  }
}

}  // namespace

TEST_CASE("typed graph construction enforces S_zx typing") {
  TypedGraph g;
  const NodeId o = g.add_node(NodeLabel::open());
  const NodeId gr = g.add_node(NodeLabel::green(Phase(1, 2)));
  const NodeId rd = g.add_node(NodeLabel::red(Phase()));
  const NodeId d = g.add_node(NodeLabel::diamond());
  CHECK_NOTHROW(g.add_edge(o, gr));
  CHECK_NOTHROW(g.add_edge(rd, o));
  CHECK_NOTHROW(g.add_edge(o, o));
  CHECK_THROWS_AS(g.add_edge(gr, rd), Error);
  CHECK_THROWS_AS(g.add_edge(d, o), Error);
  CHECK(g.degree(o) == 4);
  CHECK(g.incident_edges(o).size() == 3);
}

TEST_CASE("pushout examples") {
  SUBCASE("along identities") {
    const TypedGraph one = open_nodes(1);
    const auto p = pushout(one, one, one, GraphMorphism::identity(one), GraphMorphism::identity(one));
    CHECK(p.apex.node_count() == 1);
    CHECK(p.in_a == p.in_b);
  }
  SUBCASE("empty apex gives the coproduct") {
    const TypedGraph a = path(2);
    const TypedGraph b = path(3);
    const auto p = pushout(TypedGraph{}, a, b, GraphMorphism{}, GraphMorphism{});
    CHECK(p.apex.node_count() == 5);
    CHECK(p.apex.edge_count() == 3);
  }
  SUBCASE("two wires glued end to start make a path") {
    const TypedGraph k = open_nodes(1);
    const TypedGraph w = path(2);
    const auto p = pushout(k, w, w, node_only({1}), node_only({0}));
    CHECK(p.apex.node_count() == 3);
    CHECK(p.apex.edge_count() == 2);
    CHECK(oracle::isomorphic(p.apex, path(3)));
    oracle::GraphGen gen(7);
    check_pushout_universal(gen, k, w, w, node_only({1}), node_only({0}), 30);
  }
  SUBCASE("label clash is reported") {
    TypedGraph k = open_nodes(1);
    TypedGraph a = open_nodes(1);
    TypedGraph b = open_nodes(1);
    CHECK_THROWS_AS(pushout(k, a, b, node_only({0}), node_only({5})), Error);
  }
}

TEST_CASE("pushout satisfies the universal property on random instances") {
  oracle::GraphGen gen(11);
  int instances = 0;
  for (int round = 0; round < 120 && instances < 40; ++round) {
    const TypedGraph k = gen.graph(2, 1);
    const TypedGraph a = gen.graph(3, 3);
    const TypedGraph b = gen.graph(3, 3);
    auto l = gen.pick(oracle::all_morphisms(k, a));
    auto r = gen.pick(oracle::all_morphisms(k, b));
    if (!l || !r) continue;
    ++instances;
    check_pushout_universal(gen, k, a, b, *l, *r, 4);
  }
  CHECK(instances >= 20);
}

TEST_CASE("pullback examples and universal property") {
  SUBCASE("identity legs") {
    const TypedGraph c = path(3);
    const auto q = pullback(c, c, c, GraphMorphism::identity(c), GraphMorphism::identity(c));
    CHECK(oracle::isomorphic(q.apex, c));
  }
  SUBCASE("disjoint images") {
    const TypedGraph c = open_nodes(2);
    const TypedGraph x = open_nodes(1);
    const auto q = pullback(x, x, c, node_only({0}), node_only({1}));
    CHECK(q.apex.empty());
  }
  SUBCASE("two distinct points of a wire") {
    const TypedGraph x = open_nodes(1);
    const TypedGraph w = path(2);
    const auto q = pullback(x, x, w, node_only({0}), node_only({1}));
    CHECK(q.apex.node_count() == 0);
    CHECK(q.apex.edge_count() == 0);
  }
  SUBCASE("random cones") {
    oracle::GraphGen gen(23);
    int instances = 0;
    for (int round = 0; round < 200 && instances < 40; ++round) {
      const TypedGraph c = gen.graph(3, 4);
      const TypedGraph a = gen.graph(3, 3);
      const TypedGraph b = gen.graph(3, 3);
      auto l = gen.pick(oracle::all_morphisms(a, c));
      auto r = gen.pick(oracle::all_morphisms(b, c));
      if (!l || !r) continue;
      ++instances;
      const auto q = pullback(a, b, c, *l, *r);
      REQUIRE(is_morphism(q.apex, a, q.pr_a));
      REQUIRE(is_morphism(q.apex, b, q.pr_b));
      CHECK(compose(q.pr_a, *l) == compose(q.pr_b, *r));
      for (int z = 0; z < 3; ++z) {
        const TypedGraph zg = gen.graph(2, 2);
        for (const auto& f : oracle::all_morphisms(zg, a)) {
          for (const auto& g : oracle::all_morphisms(zg, b)) {
            if (compose(f, *l) != compose(g, *r)) continue;
            CHECK(oracle::count_pullback_mediators(q.apex, q.pr_a, q.pr_b, zg, f, g) == 1);
            auto u = pullback_mediator(q, f, g);
            REQUIRE(u.has_value());
            CHECK(compose(*u, q.pr_a) == f);
          }
        }
      }
    }
    CHECK(instances >= 20);
  }
}

TEST_CASE("pushout complement") {
  SUBCASE("K = L leaves the host unchanged") {
    const TypedGraph g = path(3);
    const TypedGraph l = path(2);
    const auto pc = pushout_complement(l, l, g, GraphMorphism::identity(l), GraphMorphism{{0, 1}, {0}});
    CHECK(pc.context == g);
  }
  SUBCASE("deleting an isolated diamond") {
    TypedGraph g;
    g.add_node(NodeLabel::diamond());
    const NodeId a = g.add_node(NodeLabel::open());
    const NodeId b = g.add_node(NodeLabel::open());
    g.add_edge(a, b);
    TypedGraph l;
    l.add_node(NodeLabel::diamond());
    const auto pc = pushout_complement(TypedGraph{}, l, g, GraphMorphism{}, node_only({0}));
    CHECK(oracle::isomorphic(pc.context, path(2)));
    const auto p = pushout(TypedGraph{}, l, pc.context, GraphMorphism{}, pc.k_to_context);
    CHECK(oracle::isomorphic(p.apex, g));
  }
  SUBCASE("dangling edges block deletion") {
    TypedGraph g;
    const NodeId a = g.add_node(NodeLabel::open());
    const NodeId s = g.add_node(NodeLabel::green(Phase()));
    const NodeId b = g.add_node(NodeLabel::open());
    g.add_edge(a, s);
    g.add_edge(s, b);
    TypedGraph l;
    l.add_node(NodeLabel::green(Phase()));
    try {
      pushout_complement(TypedGraph{}, l, g, GraphMorphism{}, node_only({1}));
      FAIL("expected DanglingCondition");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DanglingCondition);
    }
  }
  SUBCASE("random instances rebuild the host") {
    oracle::GraphGen gen(31);
    int instances = 0;
    for (int round = 0; round < 400 && instances < 40; ++round) {
      const TypedGraph lg = gen.graph(3, 2);
      const TypedGraph host = gen.graph(5, 6);
      auto m = gen.pick(oracle::all_monos(lg, host));
      if (!m) continue;
      // K: a random subset of L's nodes, no edges kept for variety half the time.
      TypedGraph k;
      GraphMorphism l;
      for (NodeId v = 0; v < lg.node_count(); ++v) {
        if (gen.uniform(0, 1)) {
          k.add_node(lg.label(v));
          l.node_map.push_back(v);
        }
      }
      bool dangling = false;
      std::set<NodeId> deleted;
      for (NodeId v = 0; v < lg.node_count(); ++v) {
        if (std::find(l.node_map.begin(), l.node_map.end(), v) == l.node_map.end()) deleted.insert(m->node_map[v]);
      }
      std::set<EdgeId> matched(m->edge_map.begin(), m->edge_map.end());
      for (EdgeId e = 0; e < host.edge_count(); ++e) {
        if (matched.count(e)) continue;
        if (deleted.count(host.edge(e).src) || deleted.count(host.edge(e).tgt)) dangling = true;
      }
      ++instances;
      if (dangling) {
        CHECK_THROWS_AS(pushout_complement(k, lg, host, l, *m), Error);
        continue;
      }
      const auto pc = pushout_complement(k, lg, host, l, *m);
      CHECK(is_morphism(pc.context, host, pc.context_to_host));
      CHECK(compose(pc.k_to_context, pc.context_to_host) == compose(l, *m));
      const auto p = pushout(k, lg, pc.context, l, pc.k_to_context);
      auto u = pushout_mediator(p, *m, pc.context_to_host);
      REQUIRE(u.has_value());
      CHECK(is_iso(p.apex, host, *u));
    }
    CHECK(instances >= 20);
  }
}

TEST_CASE("monomorphism enumeration") {
  CHECK(find_monomorphisms(open_nodes(1), path(3)).size() == 3);
  TypedGraph green;
  green.add_node(NodeLabel::green(Phase(1, 3)));
  CHECK(find_monomorphisms(green, path(3)).empty());
  CHECK(find_monomorphisms(path(2), path(3)).size() == 2);

  oracle::GraphGen gen(41);
  for (int round = 0; round < 150; ++round) {
    const TypedGraph p = gen.graph(3, 3);
    const TypedGraph h = gen.graph(6, 8);
    NodePins pins;
    if (p.node_count() > 0 && h.node_count() > 0 && gen.uniform(0, 2) == 0) {
      pins.emplace_back(0, static_cast<NodeId>(gen.uniform(0, h.node_count() - 1)));
    }
    CHECK(find_monomorphisms(p, h, pins) == oracle::all_monos(p, h, pins));
  }
}

TEST_CASE("isomorphism search") {
  const TypedGraph p = path(3);
  CHECK(find_isomorphism(p, p).has_value());
  TypedGraph a, b;
  a.add_node(NodeLabel::green(Phase(1, 2)));
  b.add_node(NodeLabel::green(Phase(1, 3)));
  CHECK_FALSE(find_isomorphism(a, b).has_value());

  TypedGraph q = open_nodes(3);
  q.add_edge(2, 1);
  q.add_edge(1, 0);
  CHECK(find_isomorphism(p, q, {{0, 2}, {2, 0}}).has_value());
  CHECK_FALSE(find_isomorphism(p, q, {{0, 0}, {2, 2}}).has_value());
  CHECK(find_isomorphisms(p, q).size() == 1);

  oracle::GraphGen gen(43);
  for (int round = 0; round < 200; ++round) {
    const TypedGraph x = gen.graph(5, 6);
    const TypedGraph y = round % 2 ? gen.permuted(x).first : gen.graph(5, 6);
    NodePins pins;
    if (x.node_count() > 1 && y.node_count() > 1 && round % 3 == 0) pins.emplace_back(0, 1);
    auto iso = find_isomorphism(x, y, pins);
    CHECK(iso.has_value() == oracle::isomorphic(x, y, pins));
    if (iso) CHECK(is_iso(x, y, *iso));
  }
}

TEST_CASE("canonical form agrees with isomorphism") {
  SUBCASE("identical and permuted graphs") {
    oracle::GraphGen gen(53);
    for (int round = 0; round < 150; ++round) {
      const TypedGraph x = gen.graph(8, 10);
      const auto [y, iso] = gen.permuted(x);
      std::vector<NodeId> px, py;
      for (NodeId v = 0; v < x.node_count() && v < 2; ++v) {
        px.push_back(v);
        py.push_back(iso.node_map[v]);
      }
      CHECK(canonical_form(x, px) == canonical_form(x, px));
      CHECK(canonical_form(x, px) == canonical_form(y, py));
    }
  }
  SUBCASE("pins across an asymmetric diagram") {
    TypedGraph g = open_nodes(2);
    const NodeId s = g.add_node(NodeLabel::green(Phase()));
    g.add_edge(0, s);
    g.add_edge(s, 1);
    const std::vector<NodeId> straight{0, 1};
    const std::vector<NodeId> crossed{1, 0};
    CHECK(canonical_form(g, straight) != canonical_form(g, crossed));
    CHECK(find_isomorphism(g, g, {{0, 1}, {1, 0}}).has_value() == false);
  }
  SUBCASE("random pairs, both directions of the equivalence") {
    oracle::GraphGen gen(59);
    int equal = 0;
    for (int round = 0; round < 400; ++round) {
      const auto n = gen.uniform(1, 8);
      TypedGraph x = gen.graph(n, n + 2, round % 2 == 0);
      TypedGraph y = gen.uniform(0, 1) ? gen.permuted(x).first : gen.graph(n, n + 2, round % 2 == 0);
      std::vector<NodeId> px, py;
      NodePins pins;
      if (x.node_count() > 0 && y.node_count() > 0 && round % 4 == 0) {
        px.push_back(0);
        py.push_back(0);
        pins.emplace_back(0, 0);
      }
      const bool same = canonical_form(x, px) == canonical_form(y, py);
      CHECK(same == find_isomorphism(x, y, pins).has_value());
      if (x.node_count() <= 6) CHECK(same == oracle::isomorphic(x, y, pins));
      equal += same;
    }
    CHECK(equal > 50);
  }
}
