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

#include "zxbicat/zx_rules.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "zxbicat/error.hpp"

namespace zxbicat {

// ---------------------------------------------------------------------------
// Generators

OpenGraph generator(GeneratorKind kind, std::size_t m, std::size_t n, Phase phase) {
  OpenGraph out;
  auto node_with_legs = [&](const NodeLabel& label) {
    for (std::size_t i = 0; i < m; ++i) out.inputs.push_back(out.body.add_node(NodeLabel::open()));
    const NodeId center = out.body.add_node(label);
    for (std::size_t i = 0; i < n; ++i) out.outputs.push_back(out.body.add_node(NodeLabel::open()));
    for (NodeId in : out.inputs) out.body.add_edge(in, center);
    for (NodeId o : out.outputs) out.body.add_edge(center, o);
  };
  switch (kind) {
    case GeneratorKind::Green:
      node_with_legs(NodeLabel::green(phase));
      return out;
    case GeneratorKind::Red:
      node_with_legs(NodeLabel::red(phase));
      return out;
    case GeneratorKind::Hadamard:
      if (m != 1 || n != 1) throw Error(ErrorCode::ArityUnsupported, "hadamard has exactly one input and one output");
      node_with_legs(NodeLabel::hadamard());
      return out;
    case GeneratorKind::Wire: {
      if (m != 1 || n != 1) throw Error(ErrorCode::ArityUnsupported, "wire has exactly one input and one output");
      const NodeId a = out.body.add_node(NodeLabel::open());
      const NodeId b = out.body.add_node(NodeLabel::open());
      out.body.add_edge(a, b);
      out.inputs = {a};
      out.outputs = {b};
      return out;
    }
    case GeneratorKind::Diamond:
      if (m != 0 || n != 0) throw Error(ErrorCode::ArityUnsupported, "diamond has no inputs or outputs");
      out.body.add_node(NodeLabel::diamond());
      return out;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator");
}

OpenGraph spider(LabelKind color, std::size_t m, std::size_t n, Phase phase) {
  if (color == LabelKind::Green) return generator(GeneratorKind::Green, m, n, phase);
  if (color == LabelKind::Red) return generator(GeneratorKind::Red, m, n, phase);
  throw Error(ErrorCode::InvalidArgument, "spider colour must be green or red");
}

OpenGraph color_swapped(const OpenGraph& f) {
  OpenGraph out = f;
  for (NodeId v = 0; v < f.body.node_count(); ++v) out.body.set_label(v, f.body.label(v).color_swapped());
  return out;
}

std::vector<Phase> phase_grid() {
  std::vector<Phase> out;
  for (int k = -6; k < 6; ++k) out.emplace_back(k, 6);
  return out;
}

namespace {

const Phase kPi = Phase::pi();
constexpr NodeId kNone = static_cast<NodeId>(-1);

// ---------------------------------------------------------------------------
// Host inspection

struct Leg {
  EdgeId edge;
  NodeId other;
  bool outgoing;  // edge leaves the node we asked about
};

class HostView {
 public:
  explicit HostView(const OpenGraph& host) : host_(host), on_boundary_(host.body.node_count(), 0),
                                             incident_(host.body.node_count()) {
    for (NodeId v : host.inputs) on_boundary_[v] = 1;
    for (NodeId v : host.outputs) on_boundary_[v] = 1;
    for (EdgeId e = 0; e < host.body.edge_count(); ++e) {
      incident_[host.body.edge(e).src].push_back(e);
      incident_[host.body.edge(e).tgt].push_back(e);
    }
  }

  const OpenGraph& host() const { return host_; }
  const TypedGraph& g() const { return host_.body; }
  std::size_t size() const { return host_.body.node_count(); }
  const NodeLabel& label(NodeId v) const { return host_.body.label(v); }
  bool on_boundary(NodeId v) const { return on_boundary_[v] != 0; }
  std::size_t degree(NodeId v) const { return incident_[v].size(); }

  /// Incident edge ends of a non-open node (spiders carry no self-loops).
  std::vector<Leg> legs(NodeId v) const {
    std::vector<Leg> out;
    for (EdgeId e : incident_[v]) {
      const Edge& ed = g().edge(e);
      out.push_back(Leg{e, ed.src == v ? ed.tgt : ed.src, ed.src == v});
    }
    return out;
  }

  bool is_spider(NodeId v, LabelKind color) const { return label(v).kind() == color; }
  bool is_spider(NodeId v, LabelKind color, const Phase& p) const {
    return label(v).kind() == color && label(v).phase() == p;
  }

  /// An internal open node with exactly two edge ends, both at non-open
  /// nodes. Returns those two nodes.
  std::optional<std::pair<NodeId, NodeId>> connector(NodeId o) const {
    if (!label(o).is_open() || on_boundary(o) || degree(o) != 2) return std::nullopt;
    const Edge& a = g().edge(incident_[o][0]);
    const Edge& b = g().edge(incident_[o][1]);
    if (incident_[o][0] == incident_[o][1]) return std::nullopt;
    const NodeId x = a.src == o ? a.tgt : a.src;
    const NodeId y = b.src == o ? b.tgt : b.src;
    if (label(x).is_open() || label(y).is_open()) return std::nullopt;
    return std::pair{x, y};
  }

  /// The other end of a connector reached from `from` through `o`.
  std::optional<NodeId> through(NodeId o, NodeId from) const {
    auto c = connector(o);
    if (!c) return std::nullopt;
    if (c->first == from && c->second != from) return c->second;
    if (c->second == from && c->first != from) return c->first;
    return std::nullopt;
  }

 private:
  const OpenGraph& host_;
  std::vector<char> on_boundary_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Builds one rule instance from a region of the host: `core` nodes and
// `core_edges` are deleted, their open neighbours form K, and the right-hand
// side is assembled over K.
class Instance {
 public:
  Instance(const HostView& hv, std::vector<NodeId> core, std::vector<EdgeId> core_edges = {})
      : hv_(hv), core_(std::move(core)), core_edges_(std::move(core_edges)) {
    std::set<NodeId> in_core(core_.begin(), core_.end());
    for (NodeId c : core_) {
      for (const Leg& l : hv.legs(c)) {
        if (!in_core.count(l.other)) add_boundary(l.other);
      }
    }
    for (EdgeId e : core_edges_) {
      add_boundary(hv.g().edge(e).src);
      add_boundary(hv.g().edge(e).tgt);
    }
    for (NodeId b : boundary_) {
      if (!hv.label(b).is_open()) ok_ = false;
    }
    for (std::size_t i = 0; i < boundary_.size(); ++i) rhs_.body.add_node(NodeLabel::open());
  }

  bool ok() const { return ok_; }

  NodeId b(NodeId host_node) const { return pos_.at(host_node); }
  NodeId add(const NodeLabel& label) { return rhs_.body.add_node(label); }
  void edge(NodeId src, NodeId tgt) { rhs_.body.add_edge(src, tgt); }

  /// Edges between a core node and the boundary, in host order.
  std::vector<EdgeId> boundary_edges(NodeId core_node) const {
    std::vector<EdgeId> out;
    for (const Leg& l : hv_.legs(core_node)) {
      if (pos_.count(l.other) && std::find(core_.begin(), core_.end(), l.other) == core_.end()) {
        out.push_back(l.edge);
      }
    }
    return out;
  }

  /// Re-attaches a host edge: its endpoint `from` becomes R node `to`, its
  /// other endpoint must be on the boundary.
  void transfer(EdgeId e, NodeId from, NodeId to) {
    const Edge& ed = hv_.g().edge(e);
    if (ed.src == from) {
      edge(to, b(ed.tgt));
    } else {
      edge(b(ed.src), to);
    }
  }

  std::optional<Match> finish(const std::string& name, RuleTag tag) const {
    if (!ok_) return std::nullopt;
    std::set<NodeId> in_core(core_.begin(), core_.end());
    OpenGraph lhs;
    GraphMorphism m;
    std::map<NodeId, NodeId> lid;
    for (NodeId v : boundary_) {
      lid[v] = lhs.body.add_node(hv_.label(v));
      m.node_map.push_back(v);
    }
    for (NodeId v : core_) {
      lid[v] = lhs.body.add_node(hv_.label(v));
      m.node_map.push_back(v);
    }
    std::set<EdgeId> extra(core_edges_.begin(), core_edges_.end());
    for (EdgeId e = 0; e < hv_.g().edge_count(); ++e) {
      const Edge& ed = hv_.g().edge(e);
      if (!in_core.count(ed.src) && !in_core.count(ed.tgt) && !extra.count(e)) continue;
      lhs.body.add_edge(lid.at(ed.src), lid.at(ed.tgt));
      m.edge_map.push_back(e);
    }
    OpenGraph rhs = rhs_;
    for (NodeId i = 0; i < boundary_.size(); ++i) {
      lhs.inputs.push_back(i);
      rhs.inputs.push_back(i);
    }
    Match match{make_rule(name, std::move(lhs), std::move(rhs), tag), std::move(m), std::nullopt};
    if (!is_applicable(hv_.host(), match)) return std::nullopt;
    return match;
  }

 private:
  void add_boundary(NodeId v) {
    if (pos_.count(v)) return;
    pos_[v] = static_cast<NodeId>(boundary_.size());
    boundary_.push_back(v);
  }

  const HostView& hv_;
  std::vector<NodeId> core_;
  std::vector<EdgeId> core_edges_;
  std::vector<NodeId> boundary_;
  std::map<NodeId, NodeId> pos_;
  OpenGraph rhs_;
  bool ok_ = true;
};

}  // namespace

// ---------------------------------------------------------------------------
// Families

namespace {

struct Params {
  LabelKind c;  // the family's primary colour after any colour swap
  bool dagger;
  std::string name;
  RuleTag tag;
};

using Matcher = std::function<void(const HostView&, const Params&, std::vector<Match>&)>;
using Reps = std::function<std::vector<std::pair<OpenGraph, OpenGraph>>()>;

struct Family {
  std::string name;
  LabelKind base_color;
  bool color_alias = false;
  bool dagger_alias = true;
  bool dagger_swaps_color = false;
  bool reverse_alias = false;
  Reps reps;
  Matcher forward;
  Matcher backward;  // empty: no finite matcher
};

void emit(std::vector<Match>& out, std::optional<Match> m) {
  if (m) out.push_back(std::move(*m));
}

LabelKind other(LabelKind c) { return swap_color(c); }

OpenGraph tensor_all(const std::vector<OpenGraph>& parts) {
  OpenGraph out;
  for (const auto& p : parts) out = tensor(out, p);
  return out;
}

OpenGraph repeat(const OpenGraph& f, std::size_t k) { return tensor_all(std::vector<OpenGraph>(k, f)); }

OpenGraph hadamards(std::size_t k) { return repeat(generator(GeneratorKind::Hadamard, 1, 1), k); }

/// A single edge a -> b with both ends as outputs.
OpenGraph cup_wire() {
  OpenGraph w = generator(GeneratorKind::Wire, 1, 1);
  w.outputs = {w.inputs[0], w.outputs[0]};
  w.inputs.clear();
  return w;
}

// spider: c-spiders joined through a connector fuse, phases add.
void spider_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId o = 0; o < hv.size(); ++o) {
    auto ends = hv.connector(o);
    if (!ends || ends->first == ends->second) continue;
    auto [s1, s2] = *ends;
    if (!hv.is_spider(s1, p.c) || !hv.is_spider(s2, p.c)) continue;
    if (s2 < s1) std::swap(s1, s2);
    Instance inst(hv, {s1, o, s2});
    if (!inst.ok()) continue;
    const NodeId s = inst.add(NodeLabel::spider(p.c, hv.label(s1).phase() + hv.label(s2).phase()));
    for (NodeId old : {s1, s2}) {
      for (EdgeId e : inst.boundary_edges(old)) inst.transfer(e, old, s);
    }
    emit(out, inst.finish(p.name, p.tag));
  }
}

// Reverse spider: split off a phase-0 spider carrying any subset of the legs.
constexpr std::size_t kMaxSplitLegs = 6;

void spider_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId s = 0; s < hv.size(); ++s) {
    if (!hv.is_spider(s, p.c)) continue;
    const auto legs = hv.legs(s);
    const std::size_t k = legs.size();
    if (k > kMaxSplitLegs) continue;
    // Bit i sends leg i to the phased half; the connector leaves the half
    // holding leg 0.
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      Instance inst(hv, {s});
      if (!inst.ok()) break;
      const NodeId a = inst.add(hv.label(s));
      const NodeId o = inst.add(NodeLabel::open());
      const NodeId b = inst.add(NodeLabel::spider(p.c, Phase()));
      const bool a_first = k == 0 || (mask & 1);
      inst.edge(a_first ? a : b, o);
      inst.edge(o, a_first ? b : a);
      for (std::size_t i = 0; i < k; ++i) inst.transfer(legs[i].edge, s, (mask >> i) & 1 ? a : b);
      emit(out, inst.finish(p.name, p.tag));
    }
  }
}

bool three_legged(const HostView& hv, NodeId v, LabelKind c) {
  return hv.is_spider(v, c, Phase()) && hv.legs(v).size() == 3;
}

bool distinct(std::vector<NodeId> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// bialgebra: c(0) with two free legs joined to other(c)(0) with two free
// legs becomes the complete bipartite form. Edge directions are ignored, so
// the daggered pattern is the colour-swapped one.
void bialgebra_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId o = 0; o < hv.size(); ++o) {
    auto ends = hv.connector(o);
    if (!ends) continue;
    for (auto [x, y] : {*ends, std::pair{ends->second, ends->first}}) {
      if (!three_legged(hv, x, p.c) || !three_legged(hv, y, other(p.c))) continue;
      std::vector<Leg> xl, yl;
      for (const Leg& l : hv.legs(x)) {
        if (l.other != o) xl.push_back(l);
      }
      for (const Leg& l : hv.legs(y)) {
        if (l.other != o) yl.push_back(l);
      }
      if (xl.size() != 2 || yl.size() != 2) continue;
      if (!distinct({xl[0].other, xl[1].other, yl[0].other, yl[1].other})) continue;
      Instance inst(hv, {x, o, y});
      if (!inst.ok()) continue;
      NodeId gs[2], rs[2];
      for (int i = 0; i < 2; ++i) {
        gs[i] = inst.add(NodeLabel::spider(other(p.c), Phase()));
        inst.transfer(xl[i].edge, x, gs[i]);
      }
      for (int j = 0; j < 2; ++j) {
        rs[j] = inst.add(NodeLabel::spider(p.c, Phase()));
        inst.transfer(yl[j].edge, y, rs[j]);
      }
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          const NodeId w = inst.add(NodeLabel::open());
          inst.edge(gs[i], w);
          inst.edge(w, rs[j]);
        }
      }
      emit(out, inst.finish(p.name, p.tag));
    }
  }
}

// Reverse bialgebra: the 2 x 2 bipartite form with one free leg per spider
// collapses. A-side spiders are other(c), B-side spiders are c.
void bialgebra_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  const LabelKind ca = other(p.c);
  const LabelKind cb = p.c;
  // connector legs of v leading to 3-legged spiders of colour `to`
  auto links = [&](NodeId v, LabelKind to) {
    std::vector<std::pair<Leg, NodeId>> r;
    for (const Leg& l : hv.legs(v)) {
      auto t = hv.through(l.other, v);
      if (t && three_legged(hv, *t, to)) r.emplace_back(l, *t);
    }
    return r;
  };
  for (NodeId a1 = 0; a1 < hv.size(); ++a1) {
    if (!three_legged(hv, a1, ca)) continue;
    const auto a1_links = links(a1, cb);
    for (std::size_t i = 0; i < a1_links.size(); ++i) {
      for (std::size_t j = i + 1; j < a1_links.size(); ++j) {
        NodeId b1 = a1_links[i].second, b2 = a1_links[j].second;
        NodeId w11 = a1_links[i].first.other, w12 = a1_links[j].first.other;
        if (b1 == b2) continue;
        if (b2 < b1) {
          std::swap(b1, b2);
          std::swap(w11, w12);
        }
        for (const auto& [l21, a2] : links(b1, ca)) {
          if (a2 <= a1 || l21.other == w11) continue;
          const NodeId w21 = l21.other;
          NodeId w22 = kNone;
          for (const auto& [l, t] : links(b2, ca)) {
            if (t == a2 && l.other != w12) w22 = l.other;
          }
          if (w22 == kNone) continue;
          auto free_leg = [&](NodeId v, std::initializer_list<NodeId> used) -> std::optional<Leg> {
            std::optional<Leg> f;
            for (const Leg& l : hv.legs(v)) {
              if (std::find(used.begin(), used.end(), l.other) != used.end()) continue;
              if (f) return std::nullopt;
              f = l;
            }
            return f;
          };
          auto pa1 = free_leg(a1, {w11, w12});
          auto pa2 = free_leg(a2, {w21, w22});
          auto qb1 = free_leg(b1, {w11, w21});
          auto qb2 = free_leg(b2, {w12, w22});
          if (!pa1 || !pa2 || !qb1 || !qb2) continue;
          if (!distinct({a1, a2, b1, b2, w11, w12, w21, w22, pa1->other, pa2->other, qb1->other, qb2->other})) continue;
          Instance inst(hv, {a1, a2, b1, b2, w11, w12, w21, w22});
          if (!inst.ok()) continue;
          const NodeId x = inst.add(NodeLabel::spider(cb, Phase()));
          const NodeId o = inst.add(NodeLabel::open());
          const NodeId y = inst.add(NodeLabel::spider(ca, Phase()));
          inst.edge(x, o);
          inst.edge(o, y);
          inst.transfer(pa1->edge, a1, x);
          inst.transfer(pa2->edge, a2, x);
          inst.transfer(qb1->edge, b1, y);
          inst.transfer(qb2->edge, b2, y);
          emit(out, inst.finish(p.name, p.tag));
        }
      }
    }
  }
}

// Two-legged phase-0 spider whose legs both leave (cup) or both enter (its
// dagger) or go in then out (trivial spider) becomes a plain edge.
enum class LegShape { BothOut, BothIn, Through };

LegShape shape_of(const std::vector<Leg>& legs) {
  if (legs[0].outgoing && legs[1].outgoing) return LegShape::BothOut;
  if (!legs[0].outgoing && !legs[1].outgoing) return LegShape::BothIn;
  return LegShape::Through;
}

void two_leg_forward(const HostView& hv, const Params& p, LegShape want, std::vector<Match>& out) {
  for (NodeId s = 0; s < hv.size(); ++s) {
    if (!hv.is_spider(s, p.c, Phase())) continue;
    auto legs = hv.legs(s);
    if (legs.size() != 2 || legs[0].other == legs[1].other || shape_of(legs) != want) continue;
    if (want == LegShape::Through && legs[0].outgoing) std::swap(legs[0], legs[1]);
    Instance inst(hv, {s});
    if (!inst.ok()) continue;
    // The daggered cup yields the reversed wire.
    if (want == LegShape::BothIn) std::swap(legs[0], legs[1]);
    inst.edge(inst.b(legs[0].other), inst.b(legs[1].other));
    emit(out, inst.finish(p.name, p.tag));
  }
}

void two_leg_backward(const HostView& hv, const Params& p, LegShape want, std::vector<Match>& out) {
  for (EdgeId e = 0; e < hv.g().edge_count(); ++e) {
    const Edge& ed = hv.g().edge(e);
    if (!hv.label(ed.src).is_open() || !hv.label(ed.tgt).is_open()) continue;
    Instance inst(hv, {}, {e});
    if (!inst.ok()) continue;
    const NodeId s = inst.add(NodeLabel::spider(p.c, Phase()));
    const NodeId a = inst.b(ed.src), b = inst.b(ed.tgt);
    switch (want) {
      case LegShape::BothOut:
        inst.edge(s, a);
        inst.edge(s, b);
        break;
      case LegShape::BothIn:
        inst.edge(b, s);
        inst.edge(a, s);
        break;
      case LegShape::Through:
        inst.edge(a, s);
        inst.edge(s, b);
        break;
    }
    emit(out, inst.finish(p.name, p.tag));
  }
}

// copy: a one-legged c(0) state feeding other(c)(0) copies through it.
void copy_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId r = 0; r < hv.size(); ++r) {
    if (!hv.is_spider(r, p.c, Phase())) continue;
    const auto legs = hv.legs(r);
    if (legs.size() != 1) continue;
    const NodeId o = legs[0].other;
    auto g = hv.through(o, r);
    if (!g || !hv.is_spider(*g, other(p.c), Phase())) continue;
    Instance inst(hv, {r, o, *g});
    if (!inst.ok()) continue;
    for (EdgeId e : inst.boundary_edges(*g)) inst.transfer(e, *g, inst.add(NodeLabel::spider(p.c, Phase())));
    emit(out, inst.finish(p.name, p.tag));
  }
}

// pi-copy: a two-legged c(pi) on one leg of other(c)(0) moves to all the
// other legs.
void pi_copy_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId x = 0; x < hv.size(); ++x) {
    if (!hv.is_spider(x, p.c, kPi)) continue;
    const auto legs = hv.legs(x);
    if (legs.size() != 2 || legs[0].other == legs[1].other) continue;
    for (int side = 0; side < 2; ++side) {
      const NodeId o = legs[side].other;
      const Leg& outer = legs[1 - side];
      auto g = hv.through(o, x);
      if (!g || !hv.is_spider(*g, other(p.c), Phase())) continue;
      Instance inst(hv, {x, o, *g});
      if (!inst.ok()) continue;
      const NodeId g2 = inst.add(NodeLabel::spider(other(p.c), Phase()));
      inst.transfer(outer.edge, x, g2);
      for (EdgeId e : inst.boundary_edges(*g)) {
        const NodeId w = inst.add(NodeLabel::open());
        const NodeId x2 = inst.add(NodeLabel::spider(p.c, kPi));
        inst.edge(g2, w);
        inst.edge(w, x2);
        inst.transfer(e, *g, x2);
      }
      emit(out, inst.finish(p.name, p.tag));
    }
  }
}

// Reverse pi-copy: c(pi) on every leg of other(c)(0) but one moves to the
// remaining leg.
void pi_copy_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId g = 0; g < hv.size(); ++g) {
    if (!hv.is_spider(g, other(p.c), Phase())) continue;
    const auto legs = hv.legs(g);
    if (legs.empty()) continue;
    struct Deco {
      NodeId w, x;
      Leg outer;
    };
    std::vector<std::optional<Deco>> deco(legs.size());
    std::size_t plain = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      auto x = hv.through(legs[i].other, g);
      if (x && hv.is_spider(*x, p.c, kPi)) {
        const auto xl = hv.legs(*x);
        if (xl.size() == 2) {
          const Leg& outer = xl[0].other == legs[i].other ? xl[1] : xl[0];
          if (outer.other != legs[i].other && hv.label(outer.other).is_open()) deco[i] = Deco{legs[i].other, *x, outer};
        }
      }
      plain += !deco[i].has_value();
    }
    if (plain > 1) continue;
    for (std::size_t keep = 0; keep < legs.size(); ++keep) {
      if (plain == 1 && deco[keep]) continue;
      std::vector<NodeId> core{g};
      for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i == keep) continue;
        core.push_back(deco[i]->w);
        core.push_back(deco[i]->x);
      }
      if (!distinct(core)) continue;
      Instance inst(hv, core);
      if (!inst.ok()) continue;
      const NodeId g2 = inst.add(NodeLabel::spider(other(p.c), Phase()));
      for (std::size_t i = 0; i < legs.size(); ++i) {
        if (i == keep) continue;
        inst.transfer(deco[i]->outer.edge, deco[i]->x, g2);
      }
      const NodeId w = inst.add(NodeLabel::open());
      const NodeId x2 = inst.add(NodeLabel::spider(p.c, kPi));
      inst.edge(g2, w);
      inst.edge(w, x2);
      inst.transfer(legs[keep].edge, g, x2);
      emit(out, inst.finish(p.name, p.tag));
    }
  }
}

// pi-commutation: c(pi) next to a two-legged other(c)(a) passes through it,
// negating a.
void pi_commutation_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId x = 0; x < hv.size(); ++x) {
    if (!hv.is_spider(x, p.c, kPi)) continue;
    const auto legs = hv.legs(x);
    if (legs.size() != 2 || legs[0].other == legs[1].other) continue;
    for (int side = 0; side < 2; ++side) {
      const NodeId o = legs[side].other;
      const Leg& outer = legs[1 - side];
      auto g = hv.through(o, x);
      if (!g || !hv.is_spider(*g, other(p.c))) continue;
      const auto gl = hv.legs(*g);
      if (gl.size() != 2) continue;
      const Leg& far = gl[0].other == o ? gl[1] : gl[0];
      if (far.other == o) continue;
      Instance inst(hv, {x, o, *g});
      if (!inst.ok()) continue;
      const NodeId g2 = inst.add(NodeLabel::spider(other(p.c), -hv.label(*g).phase()));
      const NodeId w = inst.add(NodeLabel::open());
      const NodeId x2 = inst.add(NodeLabel::spider(p.c, kPi));
      inst.transfer(outer.edge, x, g2);
      inst.edge(g2, w);
      inst.edge(w, x2);
      inst.transfer(far.edge, *g, x2);
      emit(out, inst.finish(p.name, p.tag));
    }
  }
}

// colour change: a c-spider with a Hadamard on every leg becomes other(c).
void color_change_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId s = 0; s < hv.size(); ++s) {
    if (!hv.is_spider(s, p.c)) continue;
    const auto legs = hv.legs(s);
    if (legs.empty()) continue;
    std::vector<NodeId> core{s};
    std::vector<std::pair<NodeId, Leg>> outer;
    bool ok = true;
    for (const Leg& l : legs) {
      auto h = hv.through(l.other, s);
      if (!h || hv.label(*h).kind() != LabelKind::Hadamard) {
        ok = false;
        break;
      }
      const auto hl = hv.legs(*h);
      if (hl.size() != 2) {
        ok = false;
        break;
      }
      const Leg& far = hl[0].other == l.other ? hl[1] : hl[0];
      if (far.other == l.other) {
        ok = false;
        break;
      }
      core.push_back(l.other);
      core.push_back(*h);
      outer.emplace_back(*h, far);
    }
    if (!ok || !distinct(core)) continue;
    std::set<NodeId> cs(core.begin(), core.end());
    if (std::any_of(outer.begin(), outer.end(), [&](auto& f) { return cs.count(f.second.other) > 0; })) continue;
    Instance inst(hv, core);
    if (!inst.ok()) continue;
    const NodeId s2 = inst.add(NodeLabel::spider(other(p.c), hv.label(s).phase()));
    for (const auto& [h, far] : outer) inst.transfer(far.edge, h, s2);
    emit(out, inst.finish(p.name, p.tag));
  }
}

void color_change_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId s = 0; s < hv.size(); ++s) {
    if (!hv.is_spider(s, other(p.c))) continue;
    const auto legs = hv.legs(s);
    if (legs.empty()) continue;
    Instance inst(hv, {s});
    if (!inst.ok()) continue;
    const NodeId s2 = inst.add(NodeLabel::spider(p.c, hv.label(s).phase()));
    for (const Leg& l : legs) {
      const NodeId a = inst.add(NodeLabel::open());
      const NodeId h = inst.add(NodeLabel::hadamard());
      inst.edge(s2, a);
      inst.edge(a, h);
      inst.transfer(l.edge, s, h);
    }
    emit(out, inst.finish(p.name, p.tag));
  }
}

// loop: a connector whose two ends are the same c-spider is removed.
void loop_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId v = 0; v < hv.size(); ++v) {
    if (!hv.label(v).is_open() || hv.on_boundary(v) || hv.degree(v) != 2) continue;
    const auto vl = hv.legs(v);
    if (vl[0].edge == vl[1].edge || vl[0].other != vl[1].other) continue;
    const NodeId s = vl[0].other;
    if (!hv.is_spider(s, p.c)) continue;
    Instance inst(hv, {s, v});
    if (!inst.ok()) continue;
    const NodeId s2 = inst.add(hv.label(s));
    for (EdgeId e : inst.boundary_edges(s)) inst.transfer(e, s, s2);
    emit(out, inst.finish(p.name, p.tag));
  }
}

void loop_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId s = 0; s < hv.size(); ++s) {
    if (!hv.is_spider(s, p.c)) continue;
    Instance inst(hv, {s});
    if (!inst.ok()) continue;
    const NodeId s2 = inst.add(hv.label(s));
    for (EdgeId e : inst.boundary_edges(s)) inst.transfer(e, s, s2);
    const NodeId v = inst.add(NodeLabel::open());
    inst.edge(v, s2);
    inst.edge(v, s2);
    emit(out, inst.finish(p.name, p.tag));
  }
}

// diamond: the dumbbell green(0) - red(0) is the diamond scalar.
void diamond_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId o = 0; o < hv.size(); ++o) {
    auto ends = hv.connector(o);
    if (!ends || ends->first == ends->second) continue;
    auto [g, r] = *ends;
    if (hv.label(g).kind() == LabelKind::Red) std::swap(g, r);
    if (!hv.is_spider(g, LabelKind::Green, Phase()) || !hv.is_spider(r, LabelKind::Red, Phase())) continue;
    if (hv.legs(g).size() != 1 || hv.legs(r).size() != 1) continue;
    Instance inst(hv, {g, o, r});
    if (!inst.ok()) continue;
    inst.add(NodeLabel::diamond());
    emit(out, inst.finish(p.name, p.tag));
  }
}

void diamond_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (NodeId d = 0; d < hv.size(); ++d) {
    if (hv.label(d).kind() != LabelKind::Diamond) continue;
    Instance inst(hv, {d});
    const NodeId g = inst.add(NodeLabel::green(Phase()));
    const NodeId o = inst.add(NodeLabel::open());
    const NodeId r = inst.add(NodeLabel::red(Phase()));
    inst.edge(g, o);
    inst.edge(o, r);
    emit(out, inst.finish(p.name, p.tag));
  }
}

RewriteRule wire_rule(const std::string& name, RuleTag tag) {
  return make_rule(name, generator(GeneratorKind::Wire, 1, 1), identity(1), tag);
}

void wire_forward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  for (auto& m : find_rule_matches(wire_rule(p.name, p.tag), hv.host())) out.push_back(std::move(m));
}

void wire_backward(const HostView& hv, const Params& p, std::vector<Match>& out) {
  const RewriteRule r = reversed(wire_rule(p.name, p.tag));
  for (NodeId v = 0; v < hv.size(); ++v) {
    if (!hv.label(v).is_open()) continue;
    GraphMorphism m;
    m.node_map = {v};
    out.push_back(Match{r, std::move(m), v});
  }
}

std::vector<std::pair<OpenGraph, OpenGraph>> spider_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  const auto grid = phase_grid();
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const Phase& a : grid) {
        for (const Phase& b : grid) {
          out.emplace_back(compose(spider(LabelKind::Green, m, 1, a), spider(LabelKind::Green, 1, n, b)),
                           spider(LabelKind::Green, m, n, a + b));
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<OpenGraph, OpenGraph>> bialgebra_reps() {
  const OpenGraph copy = spider(LabelKind::Green, 1, 2);
  const OpenGraph merge = spider(LabelKind::Red, 2, 1);
  const OpenGraph middle = tensor_all({identity(1), twist(1, 1), identity(1)});
  return {{compose(merge, copy), compose(compose(tensor(copy, copy), middle), tensor(merge, merge))}};
}

std::vector<std::pair<OpenGraph, OpenGraph>> copy_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  const OpenGraph state = spider(LabelKind::Red, 0, 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    out.emplace_back(compose(state, spider(LabelKind::Green, 1, n)), repeat(state, n));
  }
  return out;
}

std::vector<std::pair<OpenGraph, OpenGraph>> pi_copy_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  const OpenGraph x = spider(LabelKind::Red, 1, 1, kPi);
  for (std::size_t n = 0; n <= 3; ++n) {
    const OpenGraph g = spider(LabelKind::Green, 1, n);
    out.emplace_back(compose(x, g), compose(g, repeat(x, n)));
  }
  return out;
}

std::vector<std::pair<OpenGraph, OpenGraph>> pi_commutation_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  const OpenGraph x = spider(LabelKind::Red, 1, 1, kPi);
  for (const Phase& a : phase_grid()) {
    out.emplace_back(compose(x, spider(LabelKind::Green, 1, 1, a)), compose(spider(LabelKind::Green, 1, 1, -a), x));
  }
  return out;
}

std::vector<std::pair<OpenGraph, OpenGraph>> color_change_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      for (const Phase& a : phase_grid()) {
        out.emplace_back(compose(compose(hadamards(m), spider(LabelKind::Red, m, n, a)), hadamards(n)),
                         spider(LabelKind::Green, m, n, a));
      }
    }
  }
  return out;
}

std::vector<std::pair<OpenGraph, OpenGraph>> loop_reps() {
  std::vector<std::pair<OpenGraph, OpenGraph>> out;
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const Phase& a : phase_grid()) {
        out.emplace_back(compose(tensor(identity(m), coevaluation(1)), spider(LabelKind::Green, m + 2, n, a)),
                         spider(LabelKind::Green, m, n, a));
      }
    }
  }
  return out;
}

const std::vector<Family>& family_table() {
  static const std::vector<Family> table = [] {
    std::vector<Family> f;
    f.push_back({"spider", LabelKind::Green, false, true, false, false, spider_reps, spider_forward, spider_backward});
    f.push_back({"bialgebra", LabelKind::Red, false, true, true, false, bialgebra_reps, bialgebra_forward,
                 bialgebra_backward});
    f.push_back({"cup", LabelKind::Green, false, false, false, false,
                 [] { return std::vector<std::pair<OpenGraph, OpenGraph>>{{spider(LabelKind::Green, 0, 2), cup_wire()}}; },
                 [](const HostView& hv, const Params& p, std::vector<Match>& out) {
                   two_leg_forward(hv, p, p.dagger ? LegShape::BothIn : LegShape::BothOut, out);
                 },
                 [](const HostView& hv, const Params& p, std::vector<Match>& out) {
                   two_leg_backward(hv, p, p.dagger ? LegShape::BothIn : LegShape::BothOut, out);
                 }});
    f.push_back({"copy", LabelKind::Red, false, true, false, false, copy_reps, copy_forward, {}});
    f.push_back({"trivial_spider", LabelKind::Green, false, true, false, false,
                 [] {
                   return std::vector<std::pair<OpenGraph, OpenGraph>>{
                       {spider(LabelKind::Green, 1, 1), generator(GeneratorKind::Wire, 1, 1)}};
                 },
                 [](const HostView& hv, const Params& p, std::vector<Match>& out) {
                   two_leg_forward(hv, p, LegShape::Through, out);
                 },
                 [](const HostView& hv, const Params& p, std::vector<Match>& out) {
                   two_leg_backward(hv, p, LegShape::Through, out);
                 }});
    f.push_back({"pi_copy", LabelKind::Red, false, true, false, false, pi_copy_reps, pi_copy_forward, pi_copy_backward});
    f.push_back({"pi_commutation", LabelKind::Red, false, true, false, true, pi_commutation_reps,
                 pi_commutation_forward, pi_commutation_forward});
    f.push_back({"color_change", LabelKind::Red, false, true, false, false, color_change_reps, color_change_forward,
                 color_change_backward});
    f.push_back({"loop", LabelKind::Green, false, true, false, false, loop_reps, loop_forward, loop_backward});
    f.push_back({"diamond", LabelKind::Green, true, true, false, false,
                 [] {
                   return std::vector<std::pair<OpenGraph, OpenGraph>>{
                       {compose(spider(LabelKind::Green, 0, 1), spider(LabelKind::Red, 1, 0)),
                        generator(GeneratorKind::Diamond, 0, 0)}};
                 },
                 diamond_forward, diamond_backward});
    f.push_back({"wire", LabelKind::Green, true, true, false, false,
                 [] {
                   return std::vector<std::pair<OpenGraph, OpenGraph>>{{generator(GeneratorKind::Wire, 1, 1), identity(1)}};
                 },
                 wire_forward, wire_backward});
    return f;
  }();
  return table;
}

const Family& family(const std::string& name) {
  for (const Family& f : family_table()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::UnknownRule, "unknown rule family " + name);
}

std::string variant_name(const std::string& fam, bool c, bool d, bool r) {
  std::string suffix = std::string(c ? "c" : "") + (d ? "d" : "") + (r ? "r" : "");
  return suffix.empty() ? fam : fam + "/" + suffix;
}

}  // namespace

// ---------------------------------------------------------------------------
// RuleSet

RuleSet::RuleSet() {
  for (const Family& f : family_table()) {
    families_.push_back(f.name);
    for (int bits = 0; bits < 8; ++bits) {
      RuleVariant v;
      v.family = f.name;
      v.color = bits & 1;
      v.dagger = bits & 2;
      v.reversed = bits & 4;
      v.name = variant_name(f.name, v.color, v.dagger, v.reversed);
      bool c = v.color, d = v.dagger, r = v.reversed;
      if (f.dagger_swaps_color && d) c = !c;
      if (f.dagger_alias) d = false;
      if (f.color_alias) c = false;
      if (f.reverse_alias) r = false;
      const std::string canonical = variant_name(f.name, c, d, r);
      if (canonical != v.name) v.alias_of = canonical;
      v.matchable = !r || static_cast<bool>(f.backward);
      variants_.push_back(std::move(v));
    }
  }
}

const RuleSet& RuleSet::standard() {
  static const RuleSet set;
  return set;
}

const RuleVariant* RuleSet::find(std::string_view name) const {
  for (const RuleVariant& v : variants_) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

const RuleVariant& RuleSet::get(std::string_view name) const {
  if (const RuleVariant* v = find(name)) return *v;
  throw Error(ErrorCode::UnknownRule, "unknown rule " + std::string(name));
}

std::vector<RewriteRule> RuleSet::representatives(const RuleVariant& v) const {
  const Family& f = family(v.family);
  std::vector<RewriteRule> out;
  const RuleTag tag = v.name == v.family ? RuleTag::Basic : RuleTag::Closure;
  for (auto [lhs, rhs] : f.reps()) {
    if (v.color) {
      lhs = color_swapped(lhs);
      rhs = color_swapped(rhs);
    }
    if (v.dagger) {
      lhs = dagger(lhs);
      rhs = dagger(rhs);
    }
    if (v.reversed) std::swap(lhs, rhs);
    out.push_back(make_rule(v.name, std::move(lhs), std::move(rhs), tag));
  }
  return out;
}

RewriteRule RuleSet::representative(const RuleVariant& v) const {
  const auto& f = family(v.family);
  if (f.name == "spider") {
    // (1, 1) with both phases zero, the smallest nontrivial fusion.
    RuleVariant probe = v;
    auto all = representatives(probe);
    const std::size_t grid = phase_grid().size();
    const std::size_t zero = 6;
    return all.at(((1 * 4 + 1) * grid + zero) * grid + zero);
  }
  return representatives(v).front();
}

std::vector<Match> RuleSet::matches(const RuleVariant& v, const OpenGraph& host) const {
  const RuleVariant& target = v.alias_of.empty() ? v : get(v.alias_of);
  const Family& f = family(target.family);
  std::vector<Match> out;
  if (!target.matchable || !v.matchable) return out;
  const Params p{target.color ? swap_color(f.base_color) : f.base_color, target.dagger, v.name,
                 v.name == v.family ? RuleTag::Basic : RuleTag::Closure};
  const HostView hv(host);
  if (target.reversed) {
    f.backward(hv, p, out);
  } else {
    f.forward(hv, p, out);
  }
  return out;
}

std::vector<Match> RuleSet::matches(std::string_view name, const OpenGraph& host) const {
  return matches(get(name), host);
}

}  // namespace zxbicat
