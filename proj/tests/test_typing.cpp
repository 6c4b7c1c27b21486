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

#include <vector>
#include <numeric>

#include "doctest.h"
#include "zxbicat/error.hpp"
#include "zxbicat/zx_typing.hpp"

using namespace zxbicat;

namespace {

// x = p/q in units of pi, reduced into [-1, 1) by integer arithmetic.
std::pair<std::int64_t, std::int64_t> reduce(std::int64_t p, std::int64_t q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t r = ((p + q) % (2 * q) + 2 * q) % (2 * q) - q;
  const std::int64_t g = std::gcd(r, q);
  return {r / g, q / g};
}

bool same(const Phase& a, std::pair<std::int64_t, std::int64_t> b) { return a.num() == b.first && a.den() == b.second; }

std::vector<Phase> small_phases() {
  std::vector<Phase> out;
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t p = -q; p < q; ++p) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace

TEST_CASE("phases normalize into the half-open interval") {
  CHECK(same(Phase(0, 1), {0, 1}));
  CHECK(same(Phase(1, 1), {-1, 1}));
  CHECK(same(Phase(-1, 1), {-1, 1}));
  CHECK(same(Phase(3, 2), {-1, 2}));
  CHECK(same(Phase(6, 4), {-1, 2}));
  CHECK(same(Phase(2, -3), {-2, 3}));
  CHECK(same(Phase(25, 12), {1, 12}));
  CHECK_THROWS_AS(Phase(1, 0), Error);
  for (std::int64_t q = -13; q <= 13; ++q) {
    if (q == 0) continue;
    for (std::int64_t p = -40; p <= 40; ++p) CHECK(same(Phase(p, q), reduce(p, q)));
  }
}

TEST_CASE("phase addition and negation") {
  CHECK(Phase(0, 1) + Phase(0, 1) == Phase(0, 1));
  CHECK(Phase(1, 2) + Phase(1, 2) == Phase(-1, 1));
  CHECK(Phase(1, 3) + Phase(1, 4) == Phase(7, 12));
  CHECK(-Phase(0, 1) == Phase(0, 1));
  CHECK(-Phase(1, 2) == Phase(-1, 2));
  CHECK(-Phase(-1, 1) == Phase(-1, 1));
  CHECK(Phase::pi().is_pi());

  const auto all = small_phases();
  for (const Phase& a : all) {
    CHECK(same(-a, reduce(-a.num(), a.den())));
    CHECK(-(-a) == a);
    CHECK(a + Phase() == a);
    CHECK(Phase(a.num(), a.den()) == a);
    for (const Phase& b : all) {
      CHECK(a + b == b + a);
      CHECK(same(a + b, reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den())));
    }
  }
  // Associativity on a coarser grid keeps the triple loop short.
  std::vector<Phase> grid;
  for (std::int64_t q : {1, 2, 3, 4, 6, 12}) {
    for (std::int64_t p = -q; p < q; ++p) grid.emplace_back(p, q);
  }
  for (const Phase& a : grid) {
    for (const Phase& b : grid) {
      for (const Phase& c : grid) CHECK((a + b) + c == a + (b + c));
    }
  }
}

TEST_CASE("edge table of S_zx") {
  const NodeLabel o = NodeLabel::open();
  const NodeLabel g = NodeLabel::green(Phase(1, 3));
  const NodeLabel r = NodeLabel::red(Phase());
  const NodeLabel h = NodeLabel::hadamard();
  const NodeLabel d = NodeLabel::diamond();
  const std::vector<NodeLabel> all{o, g, r, h, d};
  for (const NodeLabel& a : all) {
    for (const NodeLabel& b : all) {
      const bool expected = (a.is_open() || b.is_open()) && !(a == d) && !(b == d);
      CHECK(edge_permitted(a, b) == expected);
    }
  }
}

TEST_CASE("label helpers") {
  const NodeLabel g = NodeLabel::green(Phase(1, 3));
  CHECK(g.color_swapped() == NodeLabel::red(Phase(1, 3)));
  CHECK(g.daggered() == NodeLabel::green(Phase(-1, 3)));
  CHECK(NodeLabel::hadamard().daggered() == NodeLabel::hadamard());
  CHECK(NodeLabel::open().token() != NodeLabel::hadamard().token());
  CHECK(g.token() != NodeLabel::green(Phase(1, 4)).token());
}
