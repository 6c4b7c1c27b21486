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

#include "zxbicat/service.hpp"

#include <httplib.h>

#include <fstream>
#include <mutex>
#include <sstream>

#include "zxbicat/error.hpp"
#include "zxbicat/serialize.hpp"

namespace zxbicat {

DiagramStore::DiagramStore(std::optional<std::filesystem::path> snapshot) : snapshot_(std::move(snapshot)) {
  if (!snapshot_) return;
  std::filesystem::create_directories(*snapshot_);
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    OpenGraph f = open_graph_from_json(parse_json(text.str()));
    diagrams_.emplace(content_id(f), std::move(f));
  }
}

std::string DiagramStore::put(const OpenGraph& f) {
  std::string id = content_id(f);
  std::unique_lock lock(mutex_);
  if (diagrams_.emplace(id, f).second && snapshot_) {
    std::ofstream(*snapshot_ / (id + ".json")) << to_json(f).dump();
  }
  return id;
}

std::optional<OpenGraph> DiagramStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = diagrams_.find(id);
  if (it == diagrams_.end()) return std::nullopt;
  return it->second;
}

std::size_t DiagramStore::size() const {
  std::shared_lock lock(mutex_);
  return diagrams_.size();
}

namespace {

int status_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotFound:
    case ErrorCode::UnknownRule: return 404;
    case ErrorCode::ArityMismatch:
    case ErrorCode::MiddleMismatch: return 409;
    case ErrorCode::RuleInapplicable:
    case ErrorCode::BoundaryViolation:
    case ErrorCode::DanglingCondition:
    case ErrorCode::NotOpenNode:
    case ErrorCode::NonWireOpenNode:
    case ErrorCode::ArityUnsupported: return 422;
    default: return 400;
  }
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, Json{{"error", {{"code", code}, {"message", message}}}}.dump()};
}

HttpResponse ok(const Json& j, int status = 200) { return {status, j.dump()}; }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidJson, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw Error(ErrorCode::InvalidJson, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t need_count(const Json& j, const char* key, std::size_t fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_unsigned()) throw Error(ErrorCode::InvalidJson, std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

// The variant with the same family and flags but the other direction.
const RuleVariant& turned(const RuleSet& rules, const RuleVariant& v) {
  for (const RuleVariant& w : rules.variants()) {
    if (w.family == v.family && w.color == v.color && w.dagger == v.dagger && w.reversed != v.reversed) return w;
  }
  throw Error(ErrorCode::UnknownRule, "no reverse of " + v.name);
}

}  // namespace

struct Service::Impl {
  httplib::Server server;
};

Service::Service(std::optional<std::filesystem::path> snapshot)
    : store_(std::move(snapshot)), impl_(std::make_unique<Impl>()) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  impl_->server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                     {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                                     {"Access-Control-Allow-Headers", "Content-Type"}});
  impl_->server.Get(".*", route);
  impl_->server.Post(".*", route);
  impl_->server.Put(".*", route);
  impl_->server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Service::~Service() = default;

HttpResponse Service::handle(const std::string& method, const std::string& path, const std::string& body) {
  const RuleSet& rules = RuleSet::standard();
  auto body_json = [&] { return parse_json(body); };
  auto load = [&](const std::string& id) {
    auto f = store_.get(id);
    if (!f) throw Error(ErrorCode::NotFound, "unknown diagram " + id);
    return *f;
  };
  auto stored = [&](const OpenGraph& f) { return Json{{"id", store_.put(f)}, {"diagram", to_json(f)}}; };
  try {
    const std::string prefix = "/diagrams/";
    if (method == "POST" && path == "/diagrams") {
      const Json j = body_json();
      if (j.is_object() && j.contains("term")) return ok(stored(translate(*parse_term(need_string(j, "term")))));
      return ok(stored(open_graph_from_json(j)));
    }
    if (path.rfind(prefix, 0) == 0 && (method == "GET" || method == "PUT")) {
      const std::string id = path.substr(prefix.size());
      if (method == "PUT") {
        const OpenGraph f = open_graph_from_json(body_json());
        if (content_id(f) != id) return error_response(400, "InvalidArgument", "id does not match content");
        store_.put(f);
      }
      return ok(to_json(load(id)));
    }
    if (method == "POST" && (path == "/compose" || path == "/tensor")) {
      const Json j = body_json();
      const OpenGraph a = load(need_string(j, "leftId"));
      const OpenGraph b = load(need_string(j, "rightId"));
      return ok(stored(path == "/compose" ? compose(a, b) : tensor(a, b)));
    }
    if (method == "GET" && path == "/rules") {
      Json variants = Json::array();
      for (const RuleVariant& v : rules.variants()) variants.push_back(to_json(v));
      return ok(Json{{"families", rules.families()}, {"rules", std::move(variants)}});
    }
    if (method == "POST" && path == "/matches") {
      const Json j = body_json();
      const OpenGraph f = load(need_string(j, "diagramId"));
      Json out = Json::array();
      for (const Match& m : rules.matches(need_string(j, "rule"), f)) out.push_back(match_to_json(m));
      return ok(Json{{"matches", std::move(out)}});
    }
    if (method == "POST" && path == "/rewrite") {
      const Json j = body_json();
      const OpenGraph f = load(need_string(j, "diagramId"));
      const RuleVariant* v = &rules.get(need_string(j, "rule"));
      const std::string direction = j.contains("direction") ? need_string(j, "direction") : "forward";
      if (direction == "backward") {
        v = &turned(rules, *v);
      } else if (direction != "forward") {
        throw Error(ErrorCode::InvalidJson, "direction must be 'forward' or 'backward'");
      }
      if (!v->matchable) throw Error(ErrorCode::RuleInapplicable, v->name + " has no matcher");
      const std::size_t index = need_count(j, "matchIndex", 0);
      const std::vector<Match> ms = rules.matches(*v, f);
      if (index >= ms.size()) {
        throw Error(ErrorCode::RuleInapplicable, "match index " + std::to_string(index) + " out of range; " +
                                                     v->name + " has " + std::to_string(ms.size()) + " matches");
      }
      const Rewrite r = apply(f, ms[index]);
      return ok(Json{{"resultId", store_.put(r.result)},
                     {"rule", v->name},
                     {"result", to_json(r.result)},
                     {"witness", to_json(r.witness)}});
    }
    if (method == "POST" && path == "/prove") {
      const Json j = body_json();
      const OpenGraph a = load(need_string(j, "lhsId"));
      const OpenGraph b = load(need_string(j, "rhsId"));
      Budget budget;
      if (j.contains("budget")) {
        const Json& bj = j.at("budget");
        budget.max_steps = need_count(bj, "maxSteps", budget.max_steps);
        budget.max_states = need_count(bj, "maxStates", budget.max_states);
        budget.max_nodes = need_count(bj, "maxNodes", budget.max_nodes);
      }
      const ProofResult r = prove_equal(a, b, budget);
      return ok(to_json(r), r.status == ProofStatus::Found ? 200 : 504);
    }
    if (method == "POST" && path == "/eval") {
      const Json j = body_json();
      return ok(to_json(eval(load(need_string(j, "diagramId")))));
    }
    return error_response(404, "NotFound", "no route " + method + " " + path);
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_response(400, "InvalidJson", e.what());
  }
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
  } else {
    port_ = impl_->server.bind_to_port(host, port) ? port : -1;
  }
  return port_;
}

bool Service::serve_bound() { return impl_->server.listen_after_bind(); }

bool Service::listen(const std::string& host, int port) { return bind(host, port) >= 0 && serve_bound(); }

void Service::stop() { impl_->server.stop(); }

}  // namespace zxbicat
