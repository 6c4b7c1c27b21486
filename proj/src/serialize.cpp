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

#include "zxbicat/serialize.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <limits>

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidJson, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

NodeId index(const Json& j, const char* what) {
  const std::int64_t v = integer(j, what);
  if (v < 0 || v > std::numeric_limits<NodeId>::max()) bad(std::string(what) + " out of range");
  return static_cast<NodeId>(v);
}

std::vector<NodeId> index_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<NodeId> out;
  for (const Json& v : j) out.push_back(index(v, what));
  return out;
}

const char* label_name(LabelKind k) {
  switch (k) {
    case LabelKind::Open: return "open";
    case LabelKind::Green: return "green";
    case LabelKind::Red: return "red";
    case LabelKind::Hadamard: return "h";
    case LabelKind::Diamond: return "diamond";
  }
  return "open";
}

NodeLabel label_from_json(const Json& node) {
  const Json& l = field(node, "label");
  if (!l.is_string()) bad("label must be a string");
  const std::string name = l.get<std::string>();
  if (name == "open") return NodeLabel::open();
  if (name == "h") return NodeLabel::hadamard();
  if (name == "diamond") return NodeLabel::diamond();
  if (name == "green" || name == "red") {
    Phase p;
    if (node.contains("phase")) p = phase_from_json(node["phase"]);
    return name == "green" ? NodeLabel::green(p) : NodeLabel::red(p);
  }
  bad("unknown label '" + name + "'");
}

}  // namespace

Json to_json(const Phase& p) { return Json{{"num", p.num()}, {"den", p.den()}}; }

Phase phase_from_json(const Json& j) {
  const std::int64_t num = integer(field(j, "num"), "phase numerator");
  const std::int64_t den = integer(field(j, "den"), "phase denominator");
  if (den == 0) bad("phase denominator is zero");
  return Phase(num, den);
}

Json graph_to_json(const TypedGraph& g) {
  Json nodes = Json::array();
  for (NodeId n = 0; n < g.node_count(); ++n) {
    Json node{{"id", n}, {"label", label_name(g.label(n).kind())}};
    if (g.label(n).has_phase()) node["phase"] = to_json(g.label(n).phase());
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json{{"src", e.src}, {"tgt", e.tgt}});
  return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

TypedGraph graph_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  const Json& edges = field(j, "edges");
  if (!nodes.is_array() || !edges.is_array()) bad("nodes and edges must be arrays");
  TypedGraph g;
  for (const Json& node : nodes) {
    if (index(field(node, "id"), "node id") != g.node_count()) bad("node ids must be dense and in order");
    g.add_node(label_from_json(node));
  }
  for (const Json& e : edges) {
    const NodeId s = index(field(e, "src"), "edge source");
    const NodeId t = index(field(e, "tgt"), "edge target");
    if (s >= g.node_count() || t >= g.node_count()) bad("edge endpoint out of range");
    g.add_edge(s, t);
  }
  return g;
}

Json to_json(const OpenGraph& f) {
  Json j = graph_to_json(f.body);
  j["inputs"] = f.inputs;
  j["outputs"] = f.outputs;
  return j;
}

OpenGraph open_graph_from_json(const Json& j) {
  OpenGraph f;
  f.body = graph_from_json(j);
  f.inputs = index_list(field(j, "inputs"), "input");
  f.outputs = index_list(field(j, "outputs"), "output");
  f.validate();
  return f;
}

Json to_json(const GraphMorphism& m) { return Json{{"nodeMap", m.node_map}, {"edgeMap", m.edge_map}}; }

GraphMorphism morphism_from_json(const Json& j) {
  GraphMorphism m;
  m.node_map = index_list(field(j, "nodeMap"), "node image");
  m.edge_map = index_list(field(j, "edgeMap"), "edge image");
  return m;
}

Json to_json(const TwoCell& c) {
  return Json{{"dom", to_json(c.dom)},
              {"cod", to_json(c.cod)},
              {"apex", to_json(c.apex)},
              {"legDown", to_json(c.leg_down)},
              {"legUp", to_json(c.leg_up)}};
}

TwoCell two_cell_from_json(const Json& j) {
  TwoCell c{open_graph_from_json(field(j, "dom")), open_graph_from_json(field(j, "cod")),
            open_graph_from_json(field(j, "apex")), morphism_from_json(field(j, "legDown")),
            morphism_from_json(field(j, "legUp"))};
  c.validate();
  return c;
}

Json to_json(const RewriteRule& r) {
  return Json{{"name", r.name},
              {"L", to_json(r.lhs)},
              {"R", to_json(r.rhs)},
              {"K", graph_to_json(r.k)},
              {"kl", to_json(r.kl)},
              {"kr", to_json(r.kr)}};
}

RewriteRule rule_from_json(const Json& j) {
  const Json& name = field(j, "name");
  if (!name.is_string()) bad("rule name must be a string");
  RewriteRule r;
  r.name = name.get<std::string>();
  r.lhs = open_graph_from_json(field(j, "L"));
  r.rhs = open_graph_from_json(field(j, "R"));
  r.k = graph_from_json(field(j, "K"));
  r.kl = morphism_from_json(field(j, "kl"));
  r.kr = morphism_from_json(field(j, "kr"));
  r.validate();
  return r;
}

Json to_json(const RuleVariant& v) {
  Json j{{"name", v.name},      {"family", v.family},     {"color", v.color},
         {"dagger", v.dagger},  {"reversed", v.reversed}, {"matchable", v.matchable}};
  if (!v.alias_of.empty()) j["aliasOf"] = v.alias_of;
  return j;
}

Json match_to_json(const Match& m) {
  Json j{{"rule", m.rule.name}, {"nodeMap", m.m.node_map}, {"edgeMap", m.m.edge_map}};
  if (m.expansion_node) j["expansionNode"] = *m.expansion_node;
  return j;
}

Json to_json(const Derivation& d) {
  Json steps = Json::array();
  for (const DerivationStep& s : d.steps) {
    Json step{{"rule", s.rule},
              {"direction", s.direction == Direction::Forward ? "forward" : "backward"},
              {"match", to_json(s.match)}};
    if (s.expansion_node) step["expansionNode"] = *s.expansion_node;
    step["from"] = to_json(s.from);
    step["to"] = to_json(s.to);
    steps.push_back(std::move(step));
  }
  return Json{{"start", to_json(d.start)},
              {"steps", std::move(steps)},
              {"end", to_json(d.end)},
              {"witness", to_json(d.witness)}};
}

Json to_json(const ProofResult& r) {
  Json j{{"status", r.status == ProofStatus::Found ? "found" : "notFoundWithinBudget"}, {"states", r.states}};
  if (r.derivation) {
    j["steps"] = r.derivation->steps.size();
    j["derivation"] = to_json(*r.derivation);
  }
  return j;
}

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (const Complex& z : m.data) data.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"data", std::move(data)}};
}

Json to_json(const SoundnessResult& r) {
  Json j{{"rule", r.rule}, {"sound", r.sound}, {"deviation", r.deviation}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const LawReport& r) {
  return Json{{"law", r.law},
              {"cases", r.cases},
              {"failures", r.failures},
              {"informational", r.informational},
              {"counterexamples", r.counterexamples}};
}

std::string canonical_json(const OpenGraph& f) {
  // nlohmann::json keeps object keys sorted.
  return nlohmann::json::parse(to_json(f).dump()).dump();
}

std::string content_id(const OpenGraph& f) {
  const std::string text = canonical_json(f);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const std::size_t at = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < at; ++i) {
      column = text[i] == '\n' ? 1 : column + 1;
      line += text[i] == '\n';
    }
    throw Error(ErrorCode::InvalidJson, e.what(), line, column);
  }
}

}  // namespace zxbicat
