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
#include "zxbicat/prover.hpp"
#include "zxbicat/serialize.hpp"
#include "zxbicat/zx_term.hpp"

using namespace zxbicat;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    open_graph_from_json(parse_json(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted: " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("open graph format") {
  const OpenGraph f = translate(*parse_term("(g[1,1,1/2] ; h)"));
  const Json j = to_json(f);
  REQUIRE(j.is_object());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"nodes", "edges", "inputs", "outputs"});
  bool phase_seen = false;
  for (const Json& n : j["nodes"]) {
    if (n["label"] == "green") {
      CHECK(n["phase"]["num"] == 1);
      CHECK(n["phase"]["den"] == 2);
      phase_seen = true;
    } else {
      CHECK_FALSE(n.contains("phase"));
    }
  }
  CHECK(phase_seen);
  CHECK(open_graph_from_json(j) == f);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 80; ++i) {
    const OpenGraph f = random_diagram(rng, 8);
    CHECK(open_graph_from_json(parse_json(to_json(f).dump())) == f);
    CHECK(content_id(open_graph_from_json(to_json(f))) == content_id(f));
    for (int k = 0; k < 2; ++k) {
      const auto c = random_rule_cell(rng, f);
      if (!c) continue;
      const TwoCell back = two_cell_from_json(parse_json(to_json(*c).dump()));
      CHECK(back.dom == c->dom);
      CHECK(back.cod == c->cod);
      CHECK(back.apex == c->apex);
      CHECK(back.leg_down == c->leg_down);
      CHECK(back.leg_up == c->leg_up);
    }
  }
  for (const RuleVariant& v : RuleSet::standard().variants()) {
    const RewriteRule r = RuleSet::standard().representative(v);
    const RewriteRule back = rule_from_json(parse_json(to_json(r).dump()));
    CHECK(back.name == r.name);
    CHECK(back.lhs == r.lhs);
    CHECK(back.rhs == r.rhs);
    CHECK(back.k == r.k);
    CHECK(back.kl == r.kl);
    CHECK(back.kr == r.kr);
  }
  for (int num = -13; num <= 13; ++num) {
    for (int den = 1; den <= 7; ++den) CHECK(phase_from_json(to_json(Phase(num, den))) == Phase(num, den));
  }
}

TEST_CASE("content ids") {
  const OpenGraph f = translate(*parse_term("(g[1,2,0] ; (h + w))"));
  const std::string id = content_id(f);
  CHECK(id.size() == 64);
  CHECK(id.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(id == content_id(f));
  CHECK(id != content_id(translate(*parse_term("(g[1,2,1] ; (h + w))"))));
  // Key order in the input does not matter.
  const Json reordered = parse_json(
      R"({"outputs":[1],"inputs":[0],"edges":[{"tgt":1,"src":0}],"nodes":[{"label":"open","id":0},{"id":1,"label":"open"}]})");
  CHECK(content_id(open_graph_from_json(reordered)) == content_id(generator(GeneratorKind::Wire, 1, 1)));
}

TEST_CASE("malformed input") {
  CHECK(code_of("{") == ErrorCode::InvalidJson);
  CHECK(code_of("[]") == ErrorCode::InvalidJson);
  CHECK(code_of(R"({"nodes":[],"edges":[],"inputs":[]})") == ErrorCode::InvalidJson);
  CHECK(code_of(R"({"nodes":[{"id":1,"label":"open"}],"edges":[],"inputs":[],"outputs":[]})") == ErrorCode::InvalidJson);
  CHECK(code_of(R"({"nodes":[{"id":0,"label":"blue"}],"edges":[],"inputs":[],"outputs":[]})") == ErrorCode::InvalidJson);
  // A spider without a phase has phase zero.
  CHECK(open_graph_from_json(parse_json(R"({"nodes":[{"id":0,"label":"green"}],"edges":[],"inputs":[],"outputs":[]})"))
            .body.label(0)
            .phase() == Phase());
  const ErrorCode illegal = code_of(
      R"({"nodes":[{"id":0,"label":"green","phase":{"num":0,"den":1}},{"id":1,"label":"h"}],"edges":[{"src":0,"tgt":1}],"inputs":[],"outputs":[]})");
  CHECK(illegal != ErrorCode::InvalidArgument);
  CHECK(code_of(R"({"nodes":[{"id":0,"label":"open"}],"edges":[],"inputs":[3],"outputs":[]})") != ErrorCode::InvalidArgument);
  try {
    parse_json("{\n  \"a\": ,\n}");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidJson);
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("derivation and proof result format") {
  const OpenGraph a = translate(*parse_term("(g[1,1,1/3] ; g[1,1,1/4])"));
  const OpenGraph b = translate(*parse_term("g[1,1,7/12]"));
  const ProofResult r = prove_equal(a, b);
  const Json j = to_json(r);
  CHECK(j["status"] == "found");
  CHECK(j["steps"] == 1);
  const Json& d = j["derivation"];
  REQUIRE(d["steps"].size() == 1);
  CHECK(d["steps"][0]["rule"] == "spider");
  CHECK(d["steps"][0]["direction"] == "forward");
  CHECK(d["steps"][0]["match"].contains("nodeMap"));
  CHECK(open_graph_from_json(d["start"]) == r.derivation->start);
  CHECK_NOTHROW(two_cell_from_json(d["witness"]).validate());

  const ProofResult miss = prove_equal(a, translate(*parse_term("g[1,1,1/2]")), Budget{2, 100, 0});
  const Json m = to_json(miss);
  CHECK(m["status"] == "notFoundWithinBudget");
  CHECK_FALSE(m.contains("derivation"));
}
