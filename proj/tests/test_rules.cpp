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

#include <functional>
#include <set>

#include "doctest.h"
#include "zxbicat/error.hpp"
#include "zxbicat/laws.hpp"
#include "zxbicat/semantics.hpp"
#include "zxbicat/zx_rules.hpp"

using namespace zxbicat;

namespace {

const RuleSet& rules() { return RuleSet::standard(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("variant table") {
  CHECK(rules().families().size() == 11);
  CHECK(rules().variants().size() == 88);
  std::set<std::string> names;
  for (const RuleVariant& v : rules().variants()) names.insert(v.name);
  CHECK(names.size() == 88);
  for (const char* n : {"spider", "spider/c", "spider/d", "spider/r", "spider/cd", "spider/cr", "spider/dr", "spider/cdr"}) {
    CHECK(rules().find(n) != nullptr);
  }
  CHECK(rules().find("spider/rc") == nullptr);
  const RuleVariant& v = rules().get("bialgebra/cdr");
  CHECK(v.family == "bialgebra");
  CHECK(v.color);
  CHECK(v.dagger);
  CHECK(v.reversed);

  for (const RuleVariant& x : rules().variants()) {
    if (x.alias_of.empty()) continue;
    const RuleVariant* target = rules().find(x.alias_of);
    REQUIRE(target != nullptr);
    CHECK(target->alias_of.empty());
    CHECK(target->family == x.family);
  }
  CHECK(rules().get("spider/d").alias_of == "spider");
  CHECK(rules().get("wire/c").alias_of == "wire");
  CHECK(rules().get("diamond/cd").alias_of == "diamond");
  CHECK(rules().get("bialgebra/d").alias_of == "bialgebra/c");
  CHECK(rules().get("pi_commutation/r").alias_of == "pi_commutation");
  CHECK(rules().get("cup/d").alias_of.empty());
  CHECK_FALSE(rules().get("copy/r").matchable);
  CHECK(rules().get("copy").matchable);
  CHECK(rules().get("spider/r").matchable);

  CHECK(code_of([] { rules().get("fusion"); }) == ErrorCode::UnknownRule);
  CHECK(code_of([] { rules().matches("fusion", identity(1)); }) == ErrorCode::UnknownRule);
  CHECK(phase_grid().size() == 12);
}

TEST_CASE("generator shapes") {
  const OpenGraph s = spider(LabelKind::Green, 2, 3, Phase(1, 4));
  REQUIRE(s.body.node_count() == 6);
  CHECK(s.inputs == std::vector<NodeId>{0, 1});
  CHECK(s.outputs == std::vector<NodeId>{3, 4, 5});
  CHECK(s.body.label(2).kind() == LabelKind::Green);
  CHECK(s.body.label(2).phase() == Phase(1, 4));
  for (const Edge& e : s.body.edges()) {
    CHECK(((e.tgt == 2 && e.src < 2) || (e.src == 2 && e.tgt > 2)));
  }
  CHECK(s.body.edge_count() == 5);

  const OpenGraph h = generator(GeneratorKind::Hadamard, 1, 1);
  CHECK(h.body.node_count() == 3);
  CHECK(h.body.label(1).kind() == LabelKind::Hadamard);
  const OpenGraph w = generator(GeneratorKind::Wire, 1, 1);
  CHECK(w.body.node_count() == 2);
  CHECK(w.body.edge_count() == 1);
  const OpenGraph d = generator(GeneratorKind::Diamond, 0, 0);
  CHECK(d.body.node_count() == 1);
  CHECK(d.arity_in() == 0);
  CHECK(d.arity_out() == 0);

  CHECK(code_of([] { generator(GeneratorKind::Hadamard, 2, 1); }) == ErrorCode::ArityUnsupported);
  CHECK(code_of([] { generator(GeneratorKind::Wire, 0, 1); }) == ErrorCode::ArityUnsupported);
  CHECK(code_of([] { generator(GeneratorKind::Diamond, 1, 0); }) == ErrorCode::ArityUnsupported);

  const OpenGraph r = color_swapped(s);
  CHECK(r.body.label(2).kind() == LabelKind::Red);
  CHECK(r.body.label(2).phase() == Phase(1, 4));
  CHECK(color_swapped(r) == s);
}

TEST_CASE("every representative rewrites its own left side") {
  for (const RuleVariant& v : rules().variants()) {
    if (!v.alias_of.empty() || !v.matchable) continue;
    const auto reps = rules().representatives(v);
    REQUIRE_FALSE(reps.empty());
    // A spread of instances keeps the run short.
    const std::size_t stride = std::max<std::size_t>(1, reps.size() / 12);
    for (std::size_t i = 0; i < reps.size(); i += stride) {
      const RewriteRule& r = reps[i];
      CAPTURE(v.name);
      CAPTURE(i);
      CHECK_NOTHROW(r.validate());
      CHECK(r.lhs.arity_in() == r.rhs.arity_in());
      CHECK(r.lhs.arity_out() == r.rhs.arity_out());
      const auto ms = rules().matches(v, r.lhs);
      CHECK_FALSE(ms.empty());
      bool reached = false;
      for (const Match& m : ms) {
        const OpenGraph out = apply(r.lhs, m).result;
        reached = reached || equal_up_to_iso(out, r.rhs);
        CHECK(proportional(eval(out), eval(r.lhs)));
      }
      // Backward matchers build one canonical split per site, so only the
      // forward direction has to reproduce every instance.
      if (!v.reversed) CHECK(reached);
    }
  }
}

TEST_CASE("alias variants share their target's matches") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const OpenGraph host = random_diagram(rng, 7);
    for (const RuleVariant& v : rules().variants()) {
      if (v.alias_of.empty() || !v.matchable) continue;
      const auto a = rules().matches(v, host);
      const auto b = rules().matches(v.alias_of, host);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].m == b[k].m);
        CHECK(a[k].rule.name == v.name);
      }
    }
  }
}

TEST_CASE("closure variants are related by colour swap and reversal") {
  const OpenGraph two = compose(spider(LabelKind::Green, 1, 1, Phase(1, 2)), spider(LabelKind::Green, 1, 1, Phase(1, 3)));
  const auto g = rules().matches("spider", two);
  const auto r = rules().matches("spider/c", color_swapped(two));
  REQUIRE(g.size() == r.size());
  REQUIRE_FALSE(g.empty());
  CHECK(equal_up_to_iso(color_swapped(apply(two, g.front()).result),
                        apply(color_swapped(two), r.front()).result));
  const OpenGraph fused = apply(two, g.front()).result;
  // Splitting keeps the whole phase on one side.
  const OpenGraph a = compose(spider(LabelKind::Green, 1, 1, Phase(5, 6)), spider(LabelKind::Green, 1, 1));
  const OpenGraph b = compose(spider(LabelKind::Green, 1, 1), spider(LabelKind::Green, 1, 1, Phase(5, 6)));
  bool split_a = false, split_b = false;
  for (const Match& m : rules().matches("spider/r", fused)) {
    const OpenGraph out = apply(fused, m).result;
    split_a = split_a || equal_up_to_iso(out, a);
    split_b = split_b || equal_up_to_iso(out, b);
  }
  CHECK(split_a);
  CHECK(split_b);
}
