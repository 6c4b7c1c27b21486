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

#include "zxbicat/laws.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Phase random_phase(std::mt19937_64& rng) {
  static const std::vector<Phase> grid = phase_grid();
  return grid[pick(rng, 0, grid.size() - 1)];
}

TermPtr spider_leaf(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  return make_generator(pick(rng, 0, 1) ? GeneratorKind::Green : GeneratorKind::Red, m, n, random_phase(rng));
}

// A leaf with k inputs, or k outputs when `outputs` is set.
TermPtr leaf(std::mt19937_64& rng, std::optional<std::size_t> fixed, bool outputs) {
  const std::size_t k = fixed.value_or(pick(rng, 0, 2));
  std::vector<TermPtr> options;
  options.push_back(outputs ? spider_leaf(rng, pick(rng, 0, 2), k) : spider_leaf(rng, k, pick(rng, 0, 2)));
  options.push_back(options.back());
  options.push_back(make_structural(Term::Kind::Id, k));
  if (k == 1) {
    options.push_back(make_generator(GeneratorKind::Hadamard, 1, 1));
    options.push_back(make_generator(GeneratorKind::Wire, 1, 1));
  }
  if (k >= 2) {
    const std::size_t a = pick(rng, 1, k - 1);
    options.push_back(make_structural(Term::Kind::Swap, a, k - a));
  }
  if (k > 0 && k % 2 == 0) options.push_back(make_structural(outputs ? Term::Kind::Cap : Term::Kind::Cup, k / 2));
  if (k == 0) {
    options.push_back(make_structural(outputs ? Term::Kind::Cup : Term::Kind::Cap, 1));
    options.push_back(make_generator(GeneratorKind::Diamond, 0, 0));
  }
  return options[pick(rng, 0, options.size() - 1)];
}

TermPtr gen(std::mt19937_64& rng, std::size_t depth, std::optional<std::size_t> fixed, bool outputs) {
  if (depth <= 1 || pick(rng, 0, 3) == 0) return leaf(rng, fixed, outputs);
  switch (pick(rng, 0, 2)) {
    case 0: {
      if (!outputs) {
        TermPtr a = gen(rng, depth - 1, fixed, false);
        TermPtr b = gen(rng, depth - 1, arity(*a).second, false);
        return make_compose(a, b);
      }
      TermPtr b = gen(rng, depth - 1, fixed, true);
      TermPtr a = gen(rng, depth - 1, arity(*b).first, true);
      return make_compose(a, b);
    }
    case 1: {
      std::optional<std::size_t> k1, k2;
      if (fixed) {
        k1 = pick(rng, 0, *fixed);
        k2 = *fixed - *k1;
      }
      return make_tensor(gen(rng, depth - 1, k1, outputs), gen(rng, depth - 1, k2, outputs));
    }
    default:
      return make_dagger(gen(rng, depth - 1, fixed, !outputs));
  }
}

std::pair<TermPtr, OpenGraph> small_term(std::mt19937_64& rng, std::size_t max_nodes,
                                         std::optional<std::size_t> inputs) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    TermPtr t = random_term(rng, attempt < 5000 ? 3 : 2, inputs);
    OpenGraph g = translate(*t);
    if (g.body.node_count() <= max_nodes) return {t, g};
  }
  throw Error(ErrorCode::InvalidArgument, "no random diagram within " + std::to_string(max_nodes) + " nodes");
}

bool cospans_equal(const Cospan& a, const Cospan& b) {
  return a.left == b.left && a.apex == b.apex && a.right == b.right && a.l == b.l && a.r == b.r;
}

bool squares_equal(const Square& a, const Square& b) {
  return cospans_equal(a.top, b.top) && cospans_equal(a.bottom, b.bottom) && a.phi == b.phi && a.psi == b.psi &&
         a.m == b.m && a.s == b.s && a.t == b.t && a.ml == b.ml && a.mr == b.mr;
}

Cospan tensor_cospans(const Cospan& a, const Cospan& b) {
  Cospan c;
  c.left = coproduct(a.left, b.left).sum;
  c.apex = coproduct(a.apex, b.apex).sum;
  c.right = coproduct(a.right, b.right).sum;
  c.l = sum_map(a.l, b.l, a.apex.node_count(), a.apex.edge_count());
  c.r = sum_map(a.r, b.r, a.apex.node_count(), a.apex.edge_count());
  return c;
}

// Isomorphisms x -> y with iso . f = g for every constraint (f, g).
std::vector<GraphMorphism> isos_over(const TypedGraph& x, const TypedGraph& y,
                                     const std::vector<std::pair<GraphMorphism, GraphMorphism>>& constraints) {
  std::map<NodeId, NodeId> pinned;
  for (const auto& [f, g] : constraints) {
    for (std::size_t i = 0; i < f.node_map.size(); ++i) {
      auto [it, inserted] = pinned.emplace(f.node_map[i], g.node_map[i]);
      if (!inserted && it->second != g.node_map[i]) return {};
    }
  }
  std::vector<GraphMorphism> out;
  for (GraphMorphism& iso : find_isomorphisms(x, y, NodePins(pinned.begin(), pinned.end()))) {
    bool ok = true;
    for (const auto& [f, g] : constraints) ok = ok && compose(f, iso) == g;
    if (ok) out.push_back(std::move(iso));
  }
  return out;
}

std::pair<TypedGraph, GraphMorphism> permuted(std::mt19937_64& rng, const TypedGraph& g) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<EdgeId> eorder(g.edge_count());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(eorder.begin(), eorder.end(), rng);
  GraphMorphism iso;
  iso.node_map.assign(g.node_count(), 0);
  iso.edge_map.assign(g.edge_count(), 0);
  TypedGraph h;
  for (std::size_t i = 0; i < order.size(); ++i) {
    h.add_node(g.label(order[i]));
    iso.node_map[order[i]] = static_cast<NodeId>(i);
  }
  for (std::size_t i = 0; i < eorder.size(); ++i) {
    const Edge& e = g.edge(eorder[i]);
    h.add_edge(iso.node_map[e.src], iso.node_map[e.tgt]);
    iso.edge_map[eorder[i]] = static_cast<EdgeId>(i);
  }
  return {h, iso};
}

TypedGraph without_node(const TypedGraph& g, NodeId v) {
  TypedGraph h;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (n != v) h.add_node(g.label(n));
  }
  for (const Edge& e : g.edges()) {
    if (e.src == v || e.tgt == v) continue;
    h.add_edge(e.src > v ? e.src - 1 : e.src, e.tgt > v ? e.tgt - 1 : e.tgt);
  }
  return h;
}

std::string describe(const TypedGraph& g) {
  std::string s = "nodes [";
  for (NodeId n = 0; n < g.node_count(); ++n) s += (n ? " " : "") + g.label(n).token();
  s += "] edges [";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    s += (e ? " " : "") + std::to_string(g.edge(e).src) + ">" + std::to_string(g.edge(e).tgt);
  }
  return s + "]";
}

GraphMorphism iso_of(const IsoSpan& f) { return compose(invert(f.to_a), f.to_b); }

}  // namespace

TermPtr random_term(std::mt19937_64& rng, std::size_t max_depth, std::optional<std::size_t> inputs) {
  return gen(rng, max_depth, inputs, false);
}

OpenGraph random_diagram(std::mt19937_64& rng, std::size_t max_nodes, std::optional<std::size_t> inputs) {
  return small_term(rng, max_nodes, inputs).second;
}

std::optional<TwoCell> random_rule_cell(std::mt19937_64& rng, const OpenGraph& host, const RuleSet& rules,
                                        bool allow_identity) {
  std::vector<Match> all;
  for (const RuleVariant& v : rules.variants()) {
    if (!v.alias_of.empty() || !v.matchable) continue;
    for (Match& m : rules.matches(v, host)) all.push_back(std::move(m));
  }
  const std::size_t options = all.size() + (allow_identity ? 1 : 0);
  if (options == 0) return std::nullopt;
  const std::size_t i = pick(rng, 0, options - 1);
  if (i == all.size()) return identity_2cell(host);
  return apply(host, all[i]).witness;
}

IsoSpan random_iso_span(std::mt19937_64& rng, std::size_t max_nodes) {
  IsoSpan s;
  s.x = random_graph(rng, max_nodes, max_nodes);
  std::tie(s.a, s.to_a) = permuted(rng, s.x);
  std::tie(s.b, s.to_b) = permuted(rng, s.x);
  return s;
}

TypedGraph random_graph(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges) {
  TypedGraph g;
  const std::size_t n = pick(rng, 1, std::max<std::size_t>(1, max_nodes));
  for (std::size_t i = 0; i < n; ++i) {
    switch (pick(rng, 0, 5)) {
      case 0: g.add_node(NodeLabel::green(random_phase(rng))); break;
      case 1: g.add_node(NodeLabel::red(random_phase(rng))); break;
      case 2: g.add_node(NodeLabel::hadamard()); break;
      default: g.add_node(NodeLabel::open()); break;
    }
  }
  const std::size_t tries = pick(rng, 0, max_edges);
  for (std::size_t i = 0; i < tries; ++i) {
    const auto a = static_cast<NodeId>(pick(rng, 0, n - 1));
    const auto b = static_cast<NodeId>(pick(rng, 0, n - 1));
    if (edge_permitted(g.label(a), g.label(b))) g.add_edge(a, b);
  }
  return g;
}

// Cospans and squares --------------------------------------------------------

Cospan identity_cospan(const TypedGraph& a) {
  return Cospan{a, a, a, GraphMorphism::identity(a), GraphMorphism::identity(a)};
}

Cospan compose_cospans(const Cospan& a, const Cospan& b) {
  if (!(a.right == b.left)) throw Error(ErrorCode::MiddleMismatch, "cospan feet differ");
  const PushoutResult po = pushout(a.right, a.apex, b.apex, a.r, b.l);
  return Cospan{a.left, po.apex, b.right, compose(a.l, po.in_a), compose(b.r, po.in_b)};
}

Cospan opposite(const Cospan& c) { return Cospan{c.right, c.apex, c.left, c.r, c.l}; }

void Square::validate() const {
  for (const Cospan* c : {&top, &bottom}) {
    check_morphism(c->left, c->apex, c->l, "square cospan left leg");
    check_morphism(c->right, c->apex, c->r, "square cospan right leg");
  }
  if (!is_iso(top.left, bottom.left, phi)) throw Error(ErrorCode::InvalidMorphism, "left side is not an iso");
  if (!is_iso(top.right, bottom.right, psi)) throw Error(ErrorCode::InvalidMorphism, "right side is not an iso");
  check_morphism(m, top.apex, s, "square upper leg");
  check_morphism(m, bottom.apex, t, "square lower leg");
  check_morphism(top.left, m, ml, "square left foot");
  check_morphism(top.right, m, mr, "square right foot");
  if (!(compose(ml, s) == top.l) || !(compose(mr, s) == top.r)) {
    throw Error(ErrorCode::InvalidMorphism, "square upper triangle fails");
  }
  if (!(compose(ml, t) == compose(phi, bottom.l)) || !(compose(mr, t) == compose(psi, bottom.r))) {
    throw Error(ErrorCode::InvalidMorphism, "square lower triangle fails");
  }
}

Square vertical_unit(const TypedGraph& a, const TypedGraph& b, const GraphMorphism& phi) {
  const GraphMorphism id = GraphMorphism::identity(a);
  return Square{identity_cospan(a), identity_cospan(b), phi, phi, a, id, phi, id, id};
}

Square horizontal_unit(const Cospan& c) {
  const GraphMorphism id = GraphMorphism::identity(c.apex);
  return Square{c, c, GraphMorphism::identity(c.left), GraphMorphism::identity(c.right), c.apex, id, id, c.l, c.r};
}

Square stack(const Square& sigma, const Square& tau) {
  if (!cospans_equal(sigma.bottom, tau.top)) throw Error(ErrorCode::MiddleMismatch, "squares do not stack");
  const PullbackResult pb = pullback(sigma.m, tau.m, sigma.bottom.apex, sigma.t, tau.s);
  auto ml = pullback_mediator(pb, sigma.ml, compose(sigma.phi, tau.ml));
  auto mr = pullback_mediator(pb, sigma.mr, compose(sigma.psi, tau.mr));
  if (!ml || !mr) throw Error(ErrorCode::InvalidMorphism, "stacked feet do not factor");
  return Square{sigma.top,
                tau.bottom,
                compose(sigma.phi, tau.phi),
                compose(sigma.psi, tau.psi),
                pb.apex,
                compose(pb.pr_a, sigma.s),
                compose(pb.pr_b, tau.t),
                *ml,
                *mr};
}

Square beside(const Square& sigma, const Square& tau) {
  if (!(sigma.top.right == tau.top.left) || !(sigma.bottom.right == tau.bottom.left) || !(sigma.psi == tau.phi)) {
    throw Error(ErrorCode::MiddleMismatch, "squares do not sit side by side");
  }
  const PushoutResult pt = pushout(sigma.top.right, sigma.top.apex, tau.top.apex, sigma.top.r, tau.top.l);
  const PushoutResult pd =
      pushout(sigma.bottom.right, sigma.bottom.apex, tau.bottom.apex, sigma.bottom.r, tau.bottom.l);
  const PushoutResult pm = pushout(sigma.top.right, sigma.m, tau.m, sigma.mr, tau.ml);
  auto s = pushout_mediator(pm, compose(sigma.s, pt.in_a), compose(tau.s, pt.in_b));
  auto t = pushout_mediator(pm, compose(sigma.t, pd.in_a), compose(tau.t, pd.in_b));
  if (!s || !t) throw Error(ErrorCode::InvalidMorphism, "side-by-side legs do not glue");
  Cospan top{sigma.top.left, pt.apex, tau.top.right, compose(sigma.top.l, pt.in_a), compose(tau.top.r, pt.in_b)};
  Cospan bottom{sigma.bottom.left, pd.apex, tau.bottom.right, compose(sigma.bottom.l, pd.in_a),
                compose(tau.bottom.r, pd.in_b)};
  return Square{std::move(top), std::move(bottom), sigma.phi, tau.psi, pm.apex, *s, *t,
                compose(sigma.ml, pm.in_a), compose(tau.mr, pm.in_b)};
}

Square tensor_squares(const Square& a, const Square& b) {
  auto sum = [](const GraphMorphism& f, const GraphMorphism& g, const TypedGraph& f_target) {
    return sum_map(f, g, f_target.node_count(), f_target.edge_count());
  };
  return Square{tensor_cospans(a.top, b.top),
                tensor_cospans(a.bottom, b.bottom),
                sum(a.phi, b.phi, a.bottom.left),
                sum(a.psi, b.psi, a.bottom.right),
                coproduct(a.m, b.m).sum,
                sum(a.s, b.s, a.top.apex),
                sum(a.t, b.t, a.bottom.apex),
                sum(a.ml, b.ml, a.m),
                sum(a.mr, b.mr, a.m)};
}

bool squares_equivalent(const Square& a, const Square& b) {
  if (!(a.top.left == b.top.left) || !(a.top.right == b.top.right) || !(a.bottom.left == b.bottom.left) ||
      !(a.bottom.right == b.bottom.right) || !(a.phi == b.phi) || !(a.psi == b.psi)) {
    return false;
  }
  for (const GraphMorphism& am : isos_over(a.m, b.m, {{a.ml, b.ml}, {a.mr, b.mr}})) {
    const bool top =
        !isos_over(a.top.apex, b.top.apex, {{a.top.l, b.top.l}, {a.top.r, b.top.r}, {a.s, compose(am, b.s)}})
             .empty();
    if (!top) continue;
    const bool bottom = !isos_over(a.bottom.apex, b.bottom.apex,
                                   {{a.bottom.l, b.bottom.l}, {a.bottom.r, b.bottom.r}, {a.t, compose(am, b.t)}})
                             .empty();
    if (bottom) return true;
  }
  return false;
}

Companion companion_data(const IsoSpan& f) {
  check_morphism(f.x, f.a, f.to_a, "span leg");
  check_morphism(f.x, f.b, f.to_b, "span leg");
  if (!is_iso(f.x, f.a, f.to_a) || !is_iso(f.x, f.b, f.to_b)) {
    throw Error(ErrorCode::InvalidMorphism, "span legs are not invertible");
  }
  const GraphMorphism phi = iso_of(f);
  const GraphMorphism ida = GraphMorphism::identity(f.a);
  const GraphMorphism idb = GraphMorphism::identity(f.b);
  Companion c;
  c.companion = Cospan{f.a, f.b, f.b, phi, idb};
  c.conjoint = Cospan{f.b, f.b, f.a, idb, phi};
  c.unit = Square{c.companion, identity_cospan(f.b), phi, idb, f.b, idb, idb, phi, idb};
  c.counit = Square{identity_cospan(f.a), c.companion, ida, phi, f.a, ida, phi, ida, ida};
  c.conjoint_unit = Square{identity_cospan(f.a), c.conjoint, phi, ida, f.a, ida, phi, ida, ida};
  c.conjoint_counit = Square{c.conjoint, identity_cospan(f.b), idb, phi, f.b, idb, idb, idb, phi};
  return c;
}

// Laws -------------------------------------------------------------------------

LawReport check_interchange(std::uint64_t seed, std::size_t cases, const RuleSet& rules) {
  LawReport report;
  report.law = "interchange";
  std::mt19937_64 rng(seed);
  constexpr std::size_t kMaxNodes = 6;
  for (std::size_t i = 0; i < cases; ++i) {
    auto [t1, f] = small_term(rng, kMaxNodes, std::nullopt);
    auto [t2, f2] = small_term(rng, kMaxNodes, f.arity_out());
    const TwoCell a = *random_rule_cell(rng, f, rules);
    const TwoCell b = *random_rule_cell(rng, a.cod, rules);
    const TwoCell a2 = *random_rule_cell(rng, f2, rules);
    const TwoCell b2 = *random_rule_cell(rng, a2.cod, rules);
    ++report.cases;
    const std::string where = "case " + std::to_string(i) + " over " + to_string(*t1) + " and " + to_string(*t2);
    try {
      const TwoCell lhs = horizontal_compose(vertical_compose(a, b), vertical_compose(a2, b2));
      const TwoCell rhs = vertical_compose(horizontal_compose(a, a2), horizontal_compose(b, b2));
      lhs.validate();
      rhs.validate();
      if (!parallel_equal(lhs, rhs)) {
        ++report.failures;
        report.counterexamples.push_back(where + ": composites are not parallel");
        continue;
      }
      if (canonical_key(lhs.apex) == canonical_key(rhs.apex)) ++report.informational;
    } catch (const Error& e) {
      ++report.failures;
      report.counterexamples.push_back(where + ": " + e.what());
    }
  }
  return report;
}

bool check_pushout_lemma(const TypedGraph& x) {
  const auto n = static_cast<NodeId>(x.node_count());
  const auto m = static_cast<EdgeId>(x.edge_count());
  TypedGraph x3 = coproduct(coproduct(x, x).sum, x).sum;
  TypedGraph x2 = coproduct(x, x).sum;
  // Copy j of x3 goes to the left (0) or right (1) copy of x2.
  auto partial = [&](int c0, int c1, int c2) {
    const int side[3] = {c0, c1, c2};
    GraphMorphism f;
    for (NodeId j = 0; j < 3; ++j) {
      for (NodeId v = 0; v < n; ++v) f.node_map.push_back(static_cast<NodeId>(side[j]) * n + v);
    }
    for (EdgeId j = 0; j < 3; ++j) {
      for (EdgeId e = 0; e < m; ++e) f.edge_map.push_back(static_cast<EdgeId>(side[j]) * m + e);
    }
    return f;
  };
  const GraphMorphism left = partial(0, 0, 1);   // codiagonal + x
  const GraphMorphism right = partial(0, 1, 1);  // x + codiagonal
  const PushoutResult po = pushout(x3, x2, x2, left, right);
  GraphMorphism nabla;
  for (int side = 0; side < 2; ++side) {
    for (NodeId v = 0; v < n; ++v) nabla.node_map.push_back(v);
  }
  for (int side = 0; side < 2; ++side) {
    for (EdgeId e = 0; e < m; ++e) nabla.edge_map.push_back(e);
  }
  const auto u = pushout_mediator(po, nabla, nabla);
  return u && is_iso(po.apex, x, *u);
}

LawReport check_pushout_lemma_random(std::uint64_t seed, std::size_t cases) {
  LawReport report;
  report.law = "pushout_lemma";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    TypedGraph x = random_graph(rng, 4, 5);
    ++report.cases;
    if (check_pushout_lemma(x)) continue;
    ++report.failures;
    // Shrink by deleting nodes while the failure persists.
    for (bool shrunk = true; shrunk && x.node_count() > 1;) {
      shrunk = false;
      for (NodeId v = 0; v < x.node_count(); ++v) {
        TypedGraph y = without_node(x, v);
        if (!check_pushout_lemma(y)) {
          x = std::move(y);
          shrunk = true;
          break;
        }
      }
    }
    report.counterexamples.push_back(describe(x));
  }
  return report;
}

bool check_companions(const IsoSpan& f) {
  const Companion c = companion_data(f);
  const GraphMorphism phi = iso_of(f);
  for (const Square* s : {&c.unit, &c.counit, &c.conjoint_unit, &c.conjoint_counit}) s->validate();
  const Square vunit = vertical_unit(f.a, f.b, phi);
  const bool companion_vertical = squares_equivalent(stack(c.counit, c.unit), vunit);
  const bool companion_horizontal = squares_equivalent(beside(c.counit, c.unit), horizontal_unit(c.companion));
  const bool conjoint_vertical = squares_equivalent(stack(c.conjoint_unit, c.conjoint_counit), vunit);
  const bool conjoint_horizontal =
      squares_equivalent(beside(c.conjoint_counit, c.conjoint_unit), horizontal_unit(c.conjoint));
  const bool conjoint_is_opposite = cospans_equal(c.conjoint, opposite(c.companion));
  return companion_vertical && companion_horizontal && conjoint_vertical && conjoint_horizontal &&
         conjoint_is_opposite;
}

LawReport check_companions_random(std::uint64_t seed, std::size_t cases) {
  LawReport report;
  report.law = "companions";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const IsoSpan f = random_iso_span(rng, 4);
    ++report.cases;
    try {
      if (check_companions(f)) continue;
      report.counterexamples.push_back(describe(f.x));
    } catch (const Error& e) {
      report.counterexamples.push_back(describe(f.x) + ": " + e.what());
    }
    ++report.failures;
  }
  return report;
}

OpenGraph snake(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "snake needs n >= 1");
  OpenGraph wires = generator(GeneratorKind::Wire, 1, 1);
  for (std::size_t i = 1; i < n; ++i) wires = tensor(wires, generator(GeneratorKind::Wire, 1, 1));
  return compose(tensor(wires, coevaluation(n)), tensor(evaluation(n), wires));
}

SnakeResult check_snake(std::size_t n, const Budget& budget, bool daggered) {
  const OpenGraph f = daggered ? dagger(snake(n)) : snake(n);
  const ProofResult r = prove_equal(f, identity(n), budget);
  SnakeResult out;
  if (r.status != ProofStatus::Found) return out;
  out.found = true;
  out.steps = r.derivation->steps.size();
  try {
    replay(*r.derivation);
    out.witness_valid = true;
  } catch (const Error&) {
    out.witness_valid = false;
  }
  return out;
}

bool check_monoidal_unit_cells(const IsoSpan& f, const IsoSpan& g) {
  IsoSpan fg;
  fg.a = coproduct(f.a, g.a).sum;
  fg.x = coproduct(f.x, g.x).sum;
  fg.b = coproduct(f.b, g.b).sum;
  fg.to_a = sum_map(f.to_a, g.to_a, f.a.node_count(), f.a.edge_count());
  fg.to_b = sum_map(f.to_b, g.to_b, f.b.node_count(), f.b.edge_count());
  const Square whole = vertical_unit(fg.a, fg.b, iso_of(fg));
  const Square parts = tensor_squares(vertical_unit(f.a, f.b, iso_of(f)), vertical_unit(g.a, g.b, iso_of(g)));
  whole.validate();
  parts.validate();
  return squares_equal(whole, parts) && squares_equivalent(whole, parts);
}

LawReport check_monoidal_unit_cells_random(std::uint64_t seed, std::size_t cases) {
  LawReport report;
  report.law = "monoidal_unit_cells";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const IsoSpan f = random_iso_span(rng, 3);
    const IsoSpan g = random_iso_span(rng, 3);
    ++report.cases;
    if (!check_monoidal_unit_cells(f, g)) {
      ++report.failures;
      report.counterexamples.push_back(describe(f.x) + " with " + describe(g.x));
    }
  }
  return report;
}

LawReport check_groupoid(std::uint64_t seed, std::size_t cases, const RuleSet& rules) {
  LawReport report;
  report.law = "groupoid";
  std::mt19937_64 rng(seed);
  while (report.cases < cases) {
    auto [t, host] = small_term(rng, 6, std::nullopt);
    const auto a = random_rule_cell(rng, host, rules, false);
    if (!a) continue;
    ++report.cases;
    try {
      const TwoCell there_and_back = vertical_compose(*a, reverse(*a));
      const TwoCell back_and_there = vertical_compose(reverse(*a), *a);
      there_and_back.validate();
      back_and_there.validate();
      if (!parallel_equal(there_and_back, identity_2cell(a->dom))) {
        ++report.failures;
        report.counterexamples.push_back(to_string(*t));
        continue;
      }
      if (parallel_equal(back_and_there, identity_2cell(a->cod))) ++report.informational;
    } catch (const Error& e) {
      ++report.failures;
      report.counterexamples.push_back(to_string(*t) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace zxbicat
