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

#include "zxbicat/zxbicat.h"

#include <cstring>
#include <exception>
#include <string>

#include "zxbicat/error.hpp"
#include "zxbicat/laws.hpp"
#include "zxbicat/serialize.hpp"
#include "zxbicat/service.hpp"

struct zx_diagram {
  zxbicat::OpenGraph graph;
};

namespace {

using namespace zxbicat;

thread_local std::string last_message;
thread_local std::string last_json;

zx_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return ZX_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidGraph: return ZX_ERR_INVALID_GRAPH;
    case ErrorCode::IllegalEdge: return ZX_ERR_ILLEGAL_EDGE;
    case ErrorCode::InvalidMorphism: return ZX_ERR_INVALID_MORPHISM;
    case ErrorCode::LabelClash: return ZX_ERR_LABEL_CLASH;
    case ErrorCode::DanglingCondition: return ZX_ERR_DANGLING_CONDITION;
    case ErrorCode::BoundaryViolation: return ZX_ERR_BOUNDARY_VIOLATION;
    case ErrorCode::ArityMismatch: return ZX_ERR_ARITY_MISMATCH;
    case ErrorCode::ArityUnsupported: return ZX_ERR_ARITY_UNSUPPORTED;
    case ErrorCode::NotOpenNode: return ZX_ERR_NOT_OPEN_NODE;
    case ErrorCode::MiddleMismatch: return ZX_ERR_MIDDLE_MISMATCH;
    case ErrorCode::SyntaxError: return ZX_ERR_SYNTAX;
    case ErrorCode::NonWireOpenNode: return ZX_ERR_NON_WIRE_OPEN_NODE;
    case ErrorCode::ShapeMismatch: return ZX_ERR_SHAPE_MISMATCH;
    case ErrorCode::UnknownRule: return ZX_ERR_UNKNOWN_RULE;
    case ErrorCode::RuleInapplicable: return ZX_ERR_RULE_INAPPLICABLE;
    case ErrorCode::InvalidJson: return ZX_ERR_INVALID_JSON;
    case ErrorCode::NotFound: return ZX_ERR_NOT_FOUND;
  }
  return ZX_ERR_INTERNAL;
}

zx_status fail(zx_status s, const std::string& code, const std::string& message, Json extra = Json::object()) {
  last_message = message;
  Json err{{"code", code}, {"message", message}};
  for (auto& [k, v] : extra.items()) err[k] = v;
  last_json = Json{{"error", err}}.dump();
  return s;
}

char* copy(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into statuses and error records.
template <class F>
zx_status guarded(F&& body) {
  try {
    last_message.clear();
    last_json.clear();
    body();
    return ZX_OK;
  } catch (const Error& e) {
    Json extra = Json::object();
    if (e.line()) {
      extra["line"] = *e.line();
      extra["column"] = *e.column();
    }
    return fail(status_of(e.code()), std::string(to_string(e.code())), e.what(), extra);
  } catch (const nlohmann::json::exception& e) {
    return fail(ZX_ERR_INVALID_JSON, "InvalidJson", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(ZX_ERR_IO, "IoError", e.what());
  } catch (const std::exception& e) {
    return fail(ZX_ERR_INTERNAL, "Internal", e.what());
  }
}

zx_status null_argument(const char* what) {
  return fail(ZX_ERR_INVALID_ARGUMENT, "InvalidArgument", std::string(what) + " is null");
}

zx_diagram* wrap(OpenGraph g) { return new zx_diagram{std::move(g)}; }

}  // namespace

extern "C" {

const char* zx_version(void) { return "0.1.0"; }

const char* zx_status_name(zx_status status) {
  switch (status) {
    case ZX_OK: return "Ok";
    case ZX_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case ZX_ERR_INVALID_GRAPH: return "InvalidGraph";
    case ZX_ERR_ILLEGAL_EDGE: return "IllegalEdge";
    case ZX_ERR_INVALID_MORPHISM: return "InvalidMorphism";
    case ZX_ERR_LABEL_CLASH: return "LabelClash";
    case ZX_ERR_DANGLING_CONDITION: return "DanglingCondition";
    case ZX_ERR_BOUNDARY_VIOLATION: return "BoundaryViolation";
    case ZX_ERR_ARITY_MISMATCH: return "ArityMismatch";
    case ZX_ERR_ARITY_UNSUPPORTED: return "ArityUnsupported";
    case ZX_ERR_NOT_OPEN_NODE: return "NotOpenNode";
    case ZX_ERR_MIDDLE_MISMATCH: return "MiddleMismatch";
    case ZX_ERR_SYNTAX: return "SyntaxError";
    case ZX_ERR_NON_WIRE_OPEN_NODE: return "NonWireOpenNode";
    case ZX_ERR_SHAPE_MISMATCH: return "ShapeMismatch";
    case ZX_ERR_UNKNOWN_RULE: return "UnknownRule";
    case ZX_ERR_RULE_INAPPLICABLE: return "RuleInapplicable";
    case ZX_ERR_INVALID_JSON: return "InvalidJson";
    case ZX_ERR_NOT_FOUND: return "NotFound";
    case ZX_ERR_IO: return "IoError";
    case ZX_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* zx_last_error_message(void) { return last_message.c_str(); }
const char* zx_last_error_json(void) { return last_json.c_str(); }

void zx_string_free(char* s) { delete[] s; }

zx_status zx_diagram_parse_term(const char* term, zx_diagram** out) {
  if (!term || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(translate(*parse_term(term))); });
}

zx_status zx_diagram_from_json(const char* json, zx_diagram** out) {
  if (!json || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(open_graph_from_json(parse_json(json))); });
}

zx_status zx_diagram_to_json(const zx_diagram* d, char** out) {
  if (!d || !out) return null_argument("argument");
  return guarded([&] { *out = copy(to_json(d->graph).dump()); });
}

zx_status zx_diagram_content_id(const zx_diagram* d, char** out) {
  if (!d || !out) return null_argument("argument");
  return guarded([&] { *out = copy(content_id(d->graph)); });
}

zx_status zx_diagram_arity(const zx_diagram* d, size_t* inputs, size_t* outputs) {
  if (!d || !inputs || !outputs) return null_argument("argument");
  *inputs = d->graph.arity_in();
  *outputs = d->graph.arity_out();
  return ZX_OK;
}

zx_status zx_diagram_node_count(const zx_diagram* d, size_t* nodes) {
  if (!d || !nodes) return null_argument("argument");
  *nodes = d->graph.body.node_count();
  return ZX_OK;
}

zx_status zx_diagram_equal(const zx_diagram* a, const zx_diagram* b, int* equal) {
  if (!a || !b || !equal) return null_argument("argument");
  return guarded([&] { *equal = equal_up_to_iso(a->graph, b->graph) ? 1 : 0; });
}

void zx_diagram_free(zx_diagram* d) { delete d; }

zx_status zx_diagram_compose(const zx_diagram* first, const zx_diagram* second, zx_diagram** out) {
  if (!first || !second || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(compose(first->graph, second->graph)); });
}

zx_status zx_diagram_tensor(const zx_diagram* a, const zx_diagram* b, zx_diagram** out) {
  if (!a || !b || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(tensor(a->graph, b->graph)); });
}

zx_status zx_diagram_dagger(const zx_diagram* d, zx_diagram** out) {
  if (!d || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(dagger(d->graph)); });
}

zx_status zx_eval(const zx_diagram* d, char** json_out) {
  if (!d || !json_out) return null_argument("argument");
  return guarded([&] { *json_out = copy(to_json(eval(d->graph)).dump()); });
}

zx_status zx_rules_json(char** json_out) {
  if (!json_out) return null_argument("argument");
  return guarded([&] {
    const RuleSet& rules = RuleSet::standard();
    Json variants = Json::array();
    for (const RuleVariant& v : rules.variants()) variants.push_back(to_json(v));
    *json_out = copy(Json{{"families", rules.families()}, {"rules", std::move(variants)}}.dump());
  });
}

zx_status zx_rule_json(const char* variant, char** json_out) {
  if (!variant || !json_out) return null_argument("argument");
  return guarded([&] {
    const RuleSet& rules = RuleSet::standard();
    *json_out = copy(to_json(rules.representative(rules.get(variant))).dump());
  });
}

zx_status zx_matches(const zx_diagram* d, const char* rule, char** json_out) {
  if (!d || !rule || !json_out) return null_argument("argument");
  return guarded([&] {
    Json out = Json::array();
    for (const Match& m : RuleSet::standard().matches(rule, d->graph)) out.push_back(match_to_json(m));
    *json_out = copy(Json{{"matches", std::move(out)}}.dump());
  });
}

zx_status zx_rewrite(const zx_diagram* d, const char* rule, size_t index, zx_diagram** result, char** witness_json) {
  if (!d || !rule || !result) return null_argument("argument");
  return guarded([&] {
    const std::vector<Match> ms = RuleSet::standard().matches(rule, d->graph);
    if (index >= ms.size()) {
      throw Error(ErrorCode::RuleInapplicable, "match index " + std::to_string(index) + " out of range; " + rule +
                                                   " has " + std::to_string(ms.size()) + " matches");
    }
    Rewrite r = apply(d->graph, ms[index]);
    if (witness_json) *witness_json = copy(to_json(r.witness).dump());
    *result = wrap(std::move(r.result));
  });
}

zx_status zx_prove(const zx_diagram* lhs, const zx_diagram* rhs, const zx_budget* budget, int* found,
                   char** json_out) {
  if (!lhs || !rhs || !found || !json_out) return null_argument("argument");
  return guarded([&] {
    Budget b;
    if (budget) b = Budget{budget->max_steps, budget->max_states, budget->max_nodes};
    const ProofResult r = prove_equal(lhs->graph, rhs->graph, b);
    *found = r.status == ProofStatus::Found ? 1 : 0;
    *json_out = copy(to_json(r).dump());
  });
}

zx_status zx_normalize(const zx_diagram* d, size_t max_steps, zx_diagram** out) {
  if (!d || !out) return null_argument("argument");
  return guarded([&] { *out = wrap(normalize(d->graph, max_steps)); });
}

zx_status zx_soundness(const char* rule, double tolerance, int* ok, char** json_out) {
  if (!ok || !json_out) return null_argument("argument");
  return guarded([&] {
    const auto results = check_rule_set(RuleSet::standard(), rule ? rule : "", tolerance);
    Json list = Json::array();
    bool all = true;
    for (const SoundnessResult& r : results) {
      all = all && r.sound;
      list.push_back(to_json(r));
    }
    *ok = all ? 1 : 0;
    *json_out = copy(Json{{"sound", all}, {"variants", results.size()}, {"results", std::move(list)}}.dump());
  });
}

zx_status zx_check_laws(const char* law, uint64_t seed, size_t cases, int* ok, char** json_out) {
  if (!law || !ok || !json_out) return null_argument("argument");
  return guarded([&] {
    const std::string which = law;
    std::vector<LawReport> reports;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("interchange")) reports.push_back(check_interchange(seed, cases));
    if (want("pushout_lemma")) reports.push_back(check_pushout_lemma_random(seed, cases));
    if (want("companions")) reports.push_back(check_companions_random(seed, cases));
    if (want("monoidal_unit_cells")) reports.push_back(check_monoidal_unit_cells_random(seed, cases));
    if (want("groupoid")) reports.push_back(check_groupoid(seed, cases));
    if (want("snake")) {
      LawReport snake_report;
      snake_report.law = "snake";
      for (std::size_t n = 1; n <= 2; ++n) {
        for (bool flipped : {false, true}) {
          const SnakeResult s = check_snake(n, Budget{4 * n, 10000, 0}, flipped);
          ++snake_report.cases;
          if (s.found && s.witness_valid) continue;
          ++snake_report.failures;
          snake_report.counterexamples.push_back("n=" + std::to_string(n) + (flipped ? " daggered" : ""));
        }
      }
      reports.push_back(std::move(snake_report));
    }
    if (reports.empty()) throw Error(ErrorCode::InvalidArgument, "unknown law '" + which + "'");
    Json list = Json::array();
    bool all = true;
    for (const LawReport& r : reports) {
      all = all && r.ok();
      list.push_back(to_json(r));
    }
    *ok = all ? 1 : 0;
    *json_out = copy(Json{{"ok", all}, {"seed", seed}, {"reports", std::move(list)}}.dump());
  });
}

zx_status zx_serve(const char* host, int port, const char* snapshot_dir) {
  if (!host) return null_argument("host");
  return guarded([&] {
    std::optional<std::filesystem::path> snapshot;
    if (snapshot_dir) snapshot = snapshot_dir;
    Service service(snapshot);
    if (!service.listen(host, port)) {
      throw std::filesystem::filesystem_error("cannot listen on " + std::string(host) + ":" + std::to_string(port),
                                              std::make_error_code(std::errc::address_in_use));
    }
  });
}

}  // extern "C"
