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
#include "oracles.hpp"
#include "zxbicat/error.hpp"
#include "zxbicat/laws.hpp"
#include "zxbicat/zx_rules.hpp"

using namespace zxbicat;

namespace {

OpenGraph green(Phase p) { return spider(LabelKind::Green, 1, 1, p); }
const RuleSet& rules() { return RuleSet::standard(); }

RewriteRule wire_rule() { return rules().representative(rules().get("wire")); }

// The spider fusion instance of L for two (1,1) spiders.
RewriteRule fusion(Phase a, Phase b) {
  const OpenGraph lhs = compose(green(a), green(b));
  return make_rule("spider", lhs, green(a + b));
}

OpenGraph path3() {
  return compose(generator(GeneratorKind::Wire, 1, 1), generator(GeneratorKind::Wire, 1, 1));
}

}  // namespace

TEST_CASE("rule construction") {
  const RewriteRule r = fusion(Phase(1, 3), Phase(1, 4));
  CHECK_NOTHROW(r.validate());
  CHECK(r.k.node_count() == 2);
  CHECK(r.k.edge_count() == 0);
  CHECK(is_mono(r.kl));
  const RewriteRule w = wire_rule();
  CHECK_NOTHROW(w.validate());
  CHECK(is_mono(w.kl));
  CHECK_FALSE(is_mono(w.kr));
  const RewriteRule back = reversed(w);
  CHECK(back.lhs == w.rhs);
  CHECK(back.kl == w.kr);
}

TEST_CASE("matching") {
  const OpenGraph two = compose(green(Phase(1, 3)), green(Phase(1, 4)));
  CHECK(find_rule_matches(fusion(Phase(1, 3), Phase(1, 4)), two).size() >= 1);
  CHECK_FALSE(rules().matches("spider", two).empty());

  const OpenGraph reds = compose(spider(LabelKind::Red, 1, 1, Phase(1, 3)), spider(LabelKind::Red, 1, 1, Phase(1, 4)));
  CHECK(rules().matches("spider", reds).empty());
  CHECK(find_rule_matches(fusion(Phase(1, 3), Phase(1, 4)), reds).empty());
  CHECK_FALSE(rules().matches("spider/c", reds).empty());

  // Wire rule on the 3-node path: every mono of the wire into the path
  // respects the boundary and deletes nothing.
  const OpenGraph p = path3();
  const RewriteRule w = wire_rule();
  const auto monos = oracle::all_monos(w.lhs.body, p.body);
  CHECK(monos.size() == 2);
  CHECK(find_rule_matches(w, p).size() == 2);
  CHECK(rules().matches("wire", p).size() == 2);
}

TEST_CASE("matches agree with brute-force enumeration") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const OpenGraph host = random_diagram(rng, 6);
    for (const RewriteRule& rule : {wire_rule(), fusion(Phase(), Phase())}) {
      std::size_t expected = 0;
      for (const GraphMorphism& m : oracle::all_monos(rule.lhs.body, host.body)) {
        // Boundary: interface nodes only inside the image of K.
        std::vector<bool> in_k(host.body.node_count(), false);
        for (NodeId k = 0; k < rule.k.node_count(); ++k) in_k[m.node_map[rule.kl.node_map[k]]] = true;
        bool ok = true;
        for (const auto* list : {&host.inputs, &host.outputs}) {
          for (NodeId v : *list) ok = ok && (in_k[v] || std::find(m.node_map.begin(), m.node_map.end(), v) == m.node_map.end());
        }
        // Dangling: edges outside m(L) may not touch deleted nodes.
        std::vector<bool> deleted(host.body.node_count(), false);
        for (NodeId v = 0; v < rule.lhs.body.node_count(); ++v) deleted[m.node_map[v]] = true;
        for (NodeId k = 0; k < rule.k.node_count(); ++k) deleted[m.node_map[rule.kl.node_map[k]]] = false;
        std::vector<bool> matched_edge(host.body.edge_count(), false);
        for (EdgeId e : m.edge_map) matched_edge[e] = true;
        for (EdgeId e = 0; e < host.body.edge_count(); ++e) {
          const Edge& x = host.body.edge(e);
          if (!matched_edge[e] && (deleted[x.src] || deleted[x.tgt])) ok = false;
        }
        expected += ok;
      }
      CHECK(find_rule_matches(rule, host).size() == expected);
    }
  }
}

TEST_CASE("double pushout steps") {
  const OpenGraph p = path3();
  const auto ms = rules().matches("wire", p);
  REQUIRE(ms.size() == 2);
  for (const Match& m : ms) {
    const Rewrite r = apply(p, m);
    CHECK(r.result.body.node_count() == 2);
    CHECK(r.result.body.edge_count() == 1);
    CHECK(equal_up_to_iso(r.result, generator(GeneratorKind::Wire, 1, 1)));
    CHECK_NOTHROW(r.witness.validate());
    CHECK_FALSE(is_mono(r.witness.leg_up));
  }

  const OpenGraph two = compose(green(Phase(1, 3)), green(Phase(1, 4)));
  const Rewrite fused = apply(two, rules().matches("spider", two).front());
  CHECK(equal_up_to_iso(fused.result, green(Phase(7, 12))));
  REQUIRE(fused.result.body.node_count() == 3);
  bool found = false;
  for (const NodeLabel& l : fused.result.body.labels()) {
    if (l.kind() == LabelKind::Green) {
      found = true;
      CHECK(l.phase().num() == 7);
      CHECK(l.phase().den() == 12);
    }
  }
  CHECK(found);
}

TEST_CASE("rewriting is reproduced by an independent pushout") {
  std::mt19937_64 rng(33);
  std::size_t applied = 0;
  for (int i = 0; i < 80; ++i) {
    const OpenGraph host = random_diagram(rng, 8);
    for (const RuleVariant& v : rules().variants()) {
      if (!v.alias_of.empty() || !v.matchable) continue;
      for (const Match& m : rules().matches(v, host)) {
        const Rewrite r = apply(host, m);
        CHECK_NOTHROW(r.witness.validate());
        CHECK(r.result.arity_in() == host.arity_in());
        CHECK(r.result.arity_out() == host.arity_out());
        CHECK(r.witness.dom == host);
        CHECK(r.witness.cod == r.result);
        ++applied;
        if (m.expansion_node) continue;
        const PushoutComplement pc = pushout_complement(m.rule.k, m.rule.lhs.body, host.body, m.rule.kl, m.m);
        const PushoutResult po = pushout(m.rule.k, pc.context, m.rule.rhs.body, pc.k_to_context, m.rule.kr);
        CHECK(po.apex == r.result.body);
        // The host is the pushout of L and D over K.
        const PushoutResult back = pushout(m.rule.k, m.rule.lhs.body, pc.context, m.rule.kl, pc.k_to_context);
        CHECK(oracle::isomorphic(back.apex, host.body));
        if (is_mono(m.rule.kr)) {
          // Undo at some match of the reversed rule.
          bool restored = false;
          for (const Match& u : find_rule_matches(reversed(m.rule), r.result)) {
            const Rewrite undo = apply(r.result, u);
            if (equal_up_to_iso(undo.result, host)) {
              restored = true;
              CHECK(parallel_equal(vertical_compose(r.witness, undo.witness), identity_2cell(host)));
              break;
            }
          }
          CHECK(restored);
        }
      }
    }
  }
  CHECK(applied > 100);
}

TEST_CASE("boundary and dangling conditions") {
  const RewriteRule r = fusion(Phase(), Phase());
  // The shared node of the two spiders is also an output.
  OpenGraph host = compose(green(Phase()), green(Phase()));
  NodeId middle = 0;
  for (NodeId v = 0; v < host.body.node_count(); ++v) {
    if (host.body.label(v).is_open() && host.body.degree(v) == 2) middle = v;
  }
  host.outputs.push_back(middle);
  const auto monos = find_monomorphisms(r.lhs.body, host.body);
  REQUIRE_FALSE(monos.empty());
  bool saw_boundary = false;
  for (const GraphMorphism& m : monos) {
    Match match{r, m, std::nullopt};
    try {
      check_applicable(host, match);
    } catch (const Error& e) {
      saw_boundary = saw_boundary || e.code() == ErrorCode::BoundaryViolation;
    }
    CHECK_FALSE(is_applicable(host, match));
  }
  CHECK(saw_boundary);
  CHECK(find_rule_matches(r, host).empty());
  CHECK(rules().matches("spider", host).empty());

  // A third spider hanging off the shared node.
  OpenGraph dangling = compose(green(Phase()), green(Phase()));
  for (NodeId v = 0; v < dangling.body.node_count(); ++v) {
    if (dangling.body.label(v).is_open() && dangling.body.degree(v) == 2) middle = v;
  }
  const NodeId extra = dangling.body.add_node(NodeLabel::red(Phase()));
  dangling.body.add_edge(middle, extra);
  bool saw_dangling = false;
  for (const GraphMorphism& m : find_monomorphisms(r.lhs.body, dangling.body)) {
    try {
      check_applicable(dangling, Match{r, m, std::nullopt});
    } catch (const Error& e) {
      saw_dangling = saw_dangling || e.code() == ErrorCode::DanglingCondition;
    }
  }
  CHECK(saw_dangling);
  CHECK(find_rule_matches(r, dangling).empty());
}

TEST_CASE("wire expansion") {
  const Rewrite e = apply_wire_expansion(identity(1), 0);
  CHECK(equal_up_to_iso(e.result, generator(GeneratorKind::Wire, 1, 1)));
  CHECK_NOTHROW(e.witness.validate());
  CHECK_FALSE(is_mono(e.witness.leg_down));
  CHECK(e.result.inputs[0] != e.result.outputs[0]);
  const Edge edge = e.result.body.edge(0);
  CHECK(edge.src == e.result.inputs[0]);
  CHECK(edge.tgt == e.result.outputs[0]);

  const Rewrite back = apply(e.result, rules().matches("wire", e.result).front());
  CHECK(equal_up_to_iso(back.result, identity(1)));

  const OpenGraph p = path3();
  NodeId inner = 0;
  for (NodeId v = 0; v < p.body.node_count(); ++v) {
    if (p.body.degree(v) == 2) inner = v;
  }
  const Rewrite longer = apply_wire_expansion(p, inner);
  CHECK(longer.result.body.node_count() == 4);
  CHECK(longer.result.body.edge_count() == 3);
  CHECK(equal_up_to_iso(longer.result, compose(path3(), generator(GeneratorKind::Wire, 1, 1))));

  const OpenGraph g = green(Phase());
  NodeId spider_node = 0;
  for (NodeId v = 0; v < g.body.node_count(); ++v) {
    if (!g.body.label(v).is_open()) spider_node = v;
  }
  CHECK_THROWS_AS(apply_wire_expansion(g, spider_node), Error);
  try {
    apply_wire_expansion(g, spider_node);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotOpenNode);
  }
  CHECK(rules().matches("wire/r", g).size() == 2);
}
