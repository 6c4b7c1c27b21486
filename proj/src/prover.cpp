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

#include "zxbicat/prover.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

std::vector<const RuleVariant*> search_variants(const RuleSet& rules) {
  std::vector<const RuleVariant*> out;
  for (const RuleVariant& v : rules.variants()) {
    if (v.alias_of.empty() && v.matchable) out.push_back(&v);
  }
  return out;
}

struct State {
  OpenGraph graph;
  std::size_t depth = 0;
  std::size_t parent = 0;  // index in the same side; unused at the root
  std::size_t variant = 0;
  std::size_t match_index = 0;
};

struct Side {
  std::vector<State> states;
  std::unordered_map<std::string, std::size_t> index;
  std::deque<std::size_t> frontier;
};

struct Link {
  const State* parent;
  Match match;
  Rewrite rewrite;
};

// Path from the root to `idx`, recomputing each step from its recorded match.
std::vector<Link> path_to(const Side& side, std::size_t idx, const std::vector<const RuleVariant*>& variants,
                          const RuleSet& rules) {
  std::vector<std::size_t> chain;
  for (std::size_t i = idx; i != 0; i = side.states[i].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());
  std::vector<Link> links;
  for (std::size_t i : chain) {
    const State& s = side.states[i];
    const State& p = side.states[s.parent];
    std::vector<Match> ms = rules.matches(*variants[s.variant], p.graph);
    Match m = std::move(ms.at(s.match_index));
    Rewrite r = apply(p.graph, m);
    links.push_back({&p, std::move(m), std::move(r)});
  }
  return links;
}

Derivation splice(const OpenGraph& f, const OpenGraph& g, const Side& fs, std::size_t fi, const Side& gs,
                  std::size_t gi, const std::vector<const RuleVariant*>& variants, const RuleSet& rules) {
  Derivation d;
  d.start = f;
  d.end = g;
  d.witness = identity_2cell(f);
  for (Link& l : path_to(fs, fi, variants, rules)) {
    DerivationStep step;
    step.rule = l.match.rule.name;
    step.direction = Direction::Forward;
    step.match = l.match.m;
    step.expansion_node = l.match.expansion_node;
    step.from = l.parent->graph;
    step.to = l.rewrite.result;
    step.witness = l.rewrite.witness;
    d.witness = vertical_compose(d.witness, step.witness);
    d.steps.push_back(std::move(step));
  }
  std::vector<Link> back = path_to(gs, gi, variants, rules);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    DerivationStep step;
    step.rule = it->match.rule.name;
    step.direction = Direction::Backward;
    step.match = it->match.m;
    step.expansion_node = it->match.expansion_node;
    step.from = it->rewrite.result;
    step.to = it->parent->graph;
    step.witness = reverse(it->rewrite.witness);
    d.witness = vertical_compose(d.witness, step.witness);
    d.steps.push_back(std::move(step));
  }
  return d;
}

}  // namespace

ProofResult prove_equal(const OpenGraph& f, const OpenGraph& g, const Budget& budget, const RuleSet& rules) {
  f.validate();
  g.validate();
  if (f.arity_in() != g.arity_in() || f.arity_out() != g.arity_out()) {
    throw Error(ErrorCode::ArityMismatch, "interfaces differ: " + std::to_string(f.arity_in()) + "->" +
                                              std::to_string(f.arity_out()) + " vs " + std::to_string(g.arity_in()) +
                                              "->" + std::to_string(g.arity_out()));
  }
  const std::size_t max_nodes =
      budget.max_nodes ? budget.max_nodes : 2 * std::max(f.body.node_count(), g.body.node_count()) + 4;
  const auto variants = search_variants(rules);

  ProofResult result;
  Side sides[2];
  const OpenGraph* roots[2] = {&f, &g};
  for (int s = 0; s < 2; ++s) {
    sides[s].states.push_back({*roots[s], 0, 0, 0, 0});
    sides[s].frontier.push_back(0);
  }
  const std::string fkey = canonical_key(f);
  sides[0].index.emplace(fkey, 0);
  const std::string gkey = canonical_key(g);
  sides[1].index.emplace(gkey, 0);
  result.states = fkey == gkey ? 1 : 2;
  if (fkey == gkey) {
    result.status = ProofStatus::Found;
    result.derivation = splice(f, g, sides[0], 0, sides[1], 0, variants, rules);
    return result;
  }

  std::size_t depth[2] = {0, 0};
  while (depth[0] + depth[1] < budget.max_steps) {
    // Expand the side with the smaller frontier; ties go to the f side.
    int s = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
    if (sides[s].frontier.empty()) s = 1 - s;
    if (sides[s].frontier.empty()) break;
    Side& side = sides[s];
    const Side& other = sides[1 - s];
    const std::size_t layer = depth[s];
    std::deque<std::size_t> next;
    while (!side.frontier.empty()) {
      const std::size_t idx = side.frontier.front();
      side.frontier.pop_front();
      for (std::size_t vi = 0; vi < variants.size(); ++vi) {
        const OpenGraph host = side.states[idx].graph;
        const std::vector<Match> ms = rules.matches(*variants[vi], host);
        for (std::size_t mi = 0; mi < ms.size(); ++mi) {
          Rewrite r = apply(host, ms[mi]);
          if (r.result.body.node_count() > max_nodes) continue;
          std::string key = canonical_key(r.result);
          if (side.index.count(key)) continue;
          side.states.push_back({std::move(r.result), layer + 1, idx, vi, mi});
          const std::size_t new_idx = side.states.size() - 1;
          side.index.emplace(key, new_idx);
          auto hit = other.index.find(key);
          if (hit != other.index.end()) {
            result.states += 1;
            result.status = ProofStatus::Found;
            result.derivation = s == 0 ? splice(f, g, sides[0], new_idx, sides[1], hit->second, variants, rules)
                                       : splice(f, g, sides[0], hit->second, sides[1], new_idx, variants, rules);
            return result;
          }
          if (++result.states >= budget.max_states) return result;
          next.push_back(new_idx);
        }
      }
    }
    side.frontier = std::move(next);
    depth[s] = layer + 1;
  }
  return result;
}

void replay(const Derivation& d, const RuleSet& rules) {
  auto fail = [](std::size_t i, const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "step " + std::to_string(i) + ": " + what);
  };
  OpenGraph current = d.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& s = d.steps[i];
    if (!equal_up_to_iso(current, s.from)) fail(i, "does not start where the previous step ended");
    const OpenGraph& host = s.direction == Direction::Forward ? s.from : s.to;
    const OpenGraph& expected = s.direction == Direction::Forward ? s.to : s.from;
    const RuleVariant& v = rules.get(s.rule);
    bool replayed = false;
    for (const Match& m : rules.matches(v, host)) {
      if (m.m == s.match && m.expansion_node == s.expansion_node) {
        if (!equal_up_to_iso(apply(host, m).result, expected)) fail(i, "rewrite result differs");
        replayed = true;
        break;
      }
    }
    if (!replayed) fail(i, "match of " + s.rule + " not found");
    s.witness.validate();
    current = s.to;
  }
  if (!equal_up_to_iso(current, d.end)) fail(d.steps.size(), "chain does not reach the end");
  d.witness.validate();
  if (!equal_up_to_iso(d.witness.dom, d.start) || !equal_up_to_iso(d.witness.cod, d.end)) {
    fail(d.steps.size(), "witness is not parallel to the derivation");
  }
}

OpenGraph normalize(const OpenGraph& f, std::size_t max_steps, const RuleSet& rules) {
  f.validate();
  std::vector<const RuleVariant*> order;
  for (const char* name : {"wire", "spider", "trivial_spider"}) {
    if (const RuleVariant* v = rules.find(name)) order.push_back(v);
  }
  for (const RuleVariant* v : search_variants(rules)) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  auto size = [](const OpenGraph& h) { return std::pair(h.body.node_count(), h.body.edge_count()); };
  OpenGraph current = f;
  for (std::size_t step = 0; step < max_steps; ++step) {
    bool changed = false;
    for (const RuleVariant* v : order) {
      for (const Match& m : rules.matches(*v, current)) {
        Rewrite r = apply(current, m);
        if (size(r.result) < size(current)) {
          current = std::move(r.result);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
    if (!changed) break;
  }
  return current;
}

}  // namespace zxbicat
