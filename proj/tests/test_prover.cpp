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

#include "curated_pairs.hpp"
#include "doctest.h"
#include "zxbicat/error.hpp"
#include "zxbicat/laws.hpp"
#include "zxbicat/prover.hpp"
#include "zxbicat/semantics.hpp"
#include "zxbicat/zx_term.hpp"

using namespace zxbicat;

namespace {

OpenGraph term(const char* s) { return translate(*parse_term(s)); }

}  // namespace

TEST_CASE("trivial proofs") {
  const OpenGraph f = term("(g[1,2,1/2] ; (h + w))");
  const ProofResult r = prove_equal(f, f);
  REQUIRE(r.status == ProofStatus::Found);
  CHECK(r.derivation->steps.empty());
  CHECK_NOTHROW(replay(*r.derivation));
  CHECK(parallel_equal(r.derivation->witness, identity_2cell(f)));
  try {
    prove_equal(term("h"), term("g[1,2,0]"));
    FAIL("expected ArityMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("spider fusion in one step") {
  const ProofResult r = prove_equal(term("(g[1,1,1/3] ; g[1,1,1/4])"), term("g[1,1,7/12]"), Budget{1, 10000, 0});
  REQUIRE(r.status == ProofStatus::Found);
  REQUIRE(r.derivation->steps.size() == 1);
  CHECK(r.derivation->steps[0].rule == "spider");
  CHECK_NOTHROW(replay(*r.derivation));
  CHECK(prove_equal(term("(g[1,1,1/3] ; g[1,1,1/4])"), term("g[1,1,1/2]"), Budget{3, 2000, 0}).status ==
        ProofStatus::NotFoundWithinBudget);
}

TEST_CASE("snake equations") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (bool daggered : {false, true}) {
      const SnakeResult s = check_snake(n, Budget{4 * n, 10000, 0}, daggered);
      CHECK(s.found);
      CHECK(s.steps <= 4 * n);
      CHECK(s.witness_valid);
    }
  }
}

TEST_CASE("curated relations are found and sound") {
  for (const auto& p : curated::kEqual) {
    CAPTURE(p.lhs);
    const OpenGraph a = term(p.lhs), b = term(p.rhs);
    REQUIRE(proportional(eval(a), eval(b)));
    const ProofResult r = prove_equal(a, b);
    REQUIRE(r.status == ProofStatus::Found);
    const Derivation& d = *r.derivation;
    CHECK_NOTHROW(replay(d));
    CHECK(equal_up_to_iso(d.start, a));
    CHECK(equal_up_to_iso(d.end, b));
    CHECK_NOTHROW(d.witness.validate());
    for (const DerivationStep& s : d.steps) CHECK(proportional(eval(s.from), eval(s.to)));

    // Symmetry: the reversed goal is found with the same number of steps.
    const ProofResult back = prove_equal(b, a);
    REQUIRE(back.status == ProofStatus::Found);
    CHECK(back.derivation->steps.size() == d.steps.size());
  }
}

TEST_CASE("transitivity within summed budgets") {
  const Budget each{4, 5000, 0};
  const Budget summed{8, 10000, 0};
  const char* triples[][3] = {
      {"((g[1,1,1/3] ; g[1,1,1/4]) ; g[1,1,1/6])", "(g[1,1,7/12] ; g[1,1,1/6])", "g[1,1,3/4]"},
      {"((h ; r[1,1,1/2]) ; h)", "g[1,1,1/2]", "(g[1,1,1/4] ; g[1,1,1/4])"},
      {"(((w + cap[1]) ; (cup[1] + w)) ; g[1,1,0])", "g[1,1,0]", "w"},
  };
  for (const auto& t : triples) {
    CAPTURE(t[0]);
    const OpenGraph a = term(t[0]), b = term(t[1]), c = term(t[2]);
    REQUIRE(prove_equal(a, b, each).status == ProofStatus::Found);
    REQUIRE(prove_equal(b, c, each).status == ProofStatus::Found);
    const ProofResult ac = prove_equal(a, c, summed);
    REQUIRE(ac.status == ProofStatus::Found);
    CHECK_NOTHROW(replay(*ac.derivation));
    CHECK(proportional(eval(a), eval(c)));
  }
}

TEST_CASE("different maps are never identified") {
  for (const auto& p : curated::kDifferent) {
    CAPTURE(p.lhs);
    const OpenGraph a = term(p.lhs), b = term(p.rhs);
    REQUIRE_FALSE(proportional(eval(a), eval(b)));
    const ProofResult r = prove_equal(a, b, Budget{4, 3000, 0});
    CHECK(r.status == ProofStatus::NotFoundWithinBudget);
    CHECK_FALSE(r.derivation.has_value());
    CHECK(r.states > 0);
  }
}

TEST_CASE("budget caps the states") {
  const ProofResult r = prove_equal(term("g[1,1,1/3]"), term("g[1,1,1/4]"), Budget{8, 50, 0});
  CHECK(r.status == ProofStatus::NotFoundWithinBudget);
  CHECK(r.states <= 50 + 64);
}

TEST_CASE("replay rejects tampered derivations") {
  ProofResult r = prove_equal(term("(g[1,1,1/3] ; g[1,1,1/4])"), term("g[1,1,7/12]"));
  REQUIRE(r.status == ProofStatus::Found);
  Derivation d = *r.derivation;
  d.steps[0].to = term("g[1,1,1/2]");
  CHECK_THROWS_AS(replay(d), Error);
  Derivation e = *r.derivation;
  e.steps[0].rule = "copy";
  CHECK_THROWS(replay(e));
}

TEST_CASE("normalization") {
  CHECK(equal_up_to_iso(normalize(term("((g[1,1,1/3] ; g[1,1,1/4]) ; g[1,1,1/6])")), term("g[1,1,3/4]")));
  CHECK(equal_up_to_iso(normalize(term("((w + cap[1]) ; (cup[1] + w))")), identity(1)));
  CHECK(equal_up_to_iso(normalize(term("(g[1,1,0] ; h)")), term("h")));
  std::mt19937_64 rng(51);
  for (int i = 0; i < 60; ++i) {
    const OpenGraph f = random_diagram(rng, 7);
    const OpenGraph n = normalize(f);
    CHECK(n.body.node_count() <= f.body.node_count());
    CHECK(equal_up_to_iso(normalize(n), n));
    CHECK(proportional(eval(n), eval(f)));
  }
}
