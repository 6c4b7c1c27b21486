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

// Command-line front end. Talks to the engine only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zxbicat/zxbicat.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct DiagramDeleter {
  void operator()(zx_diagram* d) const { zx_diagram_free(d); }
};
using Diagram = std::unique_ptr<zx_diagram, DiagramDeleter>;

struct CliError {
  int exit_code;
};

std::string error_json(const std::string& code, const std::string& message) {
  return nlohmann::json{{"error", {{"code", code}, {"message", message}}}}.dump();
}

[[noreturn]] void usage_error(const std::string& code, const std::string& message) {
  std::cerr << error_json(code, message) << "\n";
  throw CliError{kUsage};
}

int exit_code_for(zx_status s) {
  switch (s) {
    case ZX_ERR_SYNTAX:
    case ZX_ERR_INVALID_JSON:
    case ZX_ERR_IO:
    case ZX_ERR_INVALID_ARGUMENT:
    case ZX_ERR_UNKNOWN_RULE: return kUsage;
    default: return kFailed;
  }
}

void check(zx_status s) {
  if (s == ZX_OK) return;
  std::cerr << zx_last_error_json() << "\n";
  throw CliError{exit_code_for(s)};
}

std::string take(char* s) {
  std::string out(s);
  zx_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("IoError", "cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

// A diagram argument is a JSON file, or a term when --term is given.
Diagram load(const std::string& arg, bool as_term) {
  zx_diagram* d = nullptr;
  if (as_term) {
    check(zx_diagram_parse_term(arg.c_str(), &d));
  } else {
    check(zx_diagram_from_json(read_file(arg).c_str(), &d));
  }
  return Diagram(d);
}

void print_diagram(const zx_diagram* d) {
  char* json = nullptr;
  check(zx_diagram_to_json(d, &json));
  std::cout << take(json) << "\n";
}

std::string file_name_for(std::string variant) {
  for (char& c : variant) {
    if (c == '/') c = '_';
  }
  return variant + ".json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxbicat: open-graph rewriting for the zx calculus"};
  app.require_subcommand(1);
  bool as_term = false;
  app.add_flag("-t,--term", as_term, "Read diagram arguments as terms instead of JSON files");

  std::string term;
  auto* parse = app.add_subcommand("parse", "Translate a term to diagram JSON");
  parse->add_option("term", term, "Term, e.g. \"(g[1,1,1/3] ; g[1,1,1/4])\"")->required();

  std::string a, b;
  auto* compose = app.add_subcommand("compose", "Sequential composite, first a then b");
  compose->add_option("a", a)->required();
  compose->add_option("b", b)->required();
  auto* tensor = app.add_subcommand("tensor", "Parallel composite");
  tensor->add_option("a", a)->required();
  tensor->add_option("b", b)->required();

  auto* eval = app.add_subcommand("eval", "Matrix semantics as JSON");
  eval->add_option("diagram", a)->required();

  std::string rule;
  std::size_t match_index = 0;
  auto* matches = app.add_subcommand("matches", "Enumerate matches of a rule variant");
  matches->add_option("diagram", a)->required();
  matches->add_option("--rule", rule, "Rule variant, e.g. spider or wire/r")->required();

  bool with_witness = false;
  auto* rewrite = app.add_subcommand("rewrite", "Apply one match of a rule");
  rewrite->add_option("diagram", a)->required();
  rewrite->add_option("--rule", rule)->required();
  rewrite->add_option("--match", match_index, "Index into the match list")->default_val(0);
  rewrite->add_flag("--witness", with_witness, "Print {result, witness} instead of the result alone");

  zx_budget budget{8, 10000, 0};
  auto* prove = app.add_subcommand("prove", "Search for a derivation a => b");
  prove->add_option("a", a)->required();
  prove->add_option("b", b)->required();
  prove->add_option("--max-steps", budget.max_steps)->default_val(8);
  prove->add_option("--max-states", budget.max_states)->default_val(10000);
  prove->add_option("--max-nodes", budget.max_nodes, "0 picks 2 * max size + 4")->default_val(0);

  std::size_t max_steps = 1000;
  auto* normalize = app.add_subcommand("normalize", "Greedy size-reducing rewriting");
  normalize->add_option("diagram", a)->required();
  normalize->add_option("--max-steps", max_steps)->default_val(1000);

  bool all_rules = false;
  double tolerance = 1e-9;
  auto* soundness = app.add_subcommand("soundness", "Check eval(L) proportional to eval(R)");
  auto* rule_opt = soundness->add_option("--rule", rule, "Single variant");
  soundness->add_flag("--all", all_rules, "Every variant")->excludes(rule_opt);
  soundness->add_option("--tol", tolerance)->default_val(1e-9);

  std::uint64_t seed = 1;
  std::size_t cases = 100;
  std::string law = "all";
  auto* laws = app.add_subcommand("check-laws", "Randomized law checks");
  laws->add_option("--seed", seed)->default_val(1);
  laws->add_option("--cases", cases)->default_val(100);
  laws->add_option("--law", law)
      ->check(CLI::IsMember({"all", "interchange", "pushout_lemma", "companions", "snake", "monoidal_unit_cells",
                             "groupoid"}))
      ->default_val("all");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string snapshot;
  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON service");
  serve->add_option("--host", host)->default_val("127.0.0.1");
  serve->add_option("--port", port)->default_val(8080);
  serve->add_option("--snapshot", snapshot, "Directory mirroring the diagram store");

  std::string dir = "rules";
  bool every_variant = false;
  auto* export_rules = app.add_subcommand("export-rules", "Write rule representatives as JSON files");
  export_rules->add_option("--dir", dir)->default_val("rules");
  export_rules->add_flag("--all-variants", every_variant, "Every closure variant, not only the basic rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << error_json("UsageError", e.what()) << "\n";
    return kUsage;
  }

  try {
    if (*parse) {
      zx_diagram* d = nullptr;
      check(zx_diagram_parse_term(term.c_str(), &d));
      print_diagram(Diagram(d).get());
    } else if (*compose || *tensor) {
      Diagram x = load(a, as_term), y = load(b, as_term);
      zx_diagram* d = nullptr;
      check(*compose ? zx_diagram_compose(x.get(), y.get(), &d) : zx_diagram_tensor(x.get(), y.get(), &d));
      print_diagram(Diagram(d).get());
    } else if (*eval) {
      char* json = nullptr;
      check(zx_eval(load(a, as_term).get(), &json));
      std::cout << take(json) << "\n";
    } else if (*matches) {
      char* json = nullptr;
      check(zx_matches(load(a, as_term).get(), rule.c_str(), &json));
      std::cout << take(json) << "\n";
    } else if (*rewrite) {
      zx_diagram* result = nullptr;
      char* witness = nullptr;
      check(zx_rewrite(load(a, as_term).get(), rule.c_str(), match_index, &result, with_witness ? &witness : nullptr));
      Diagram r(result);
      if (with_witness) {
        char* json = nullptr;
        check(zx_diagram_to_json(r.get(), &json));
        std::cout << "{\"result\":" << take(json) << ",\"witness\":" << take(witness) << "}\n";
      } else {
        print_diagram(r.get());
      }
    } else if (*prove) {
      Diagram x = load(a, as_term), y = load(b, as_term);
      int found = 0;
      char* json = nullptr;
      check(zx_prove(x.get(), y.get(), &budget, &found, &json));
      std::cout << take(json) << "\n";
      return found ? kOk : kBudget;
    } else if (*normalize) {
      zx_diagram* d = nullptr;
      check(zx_normalize(load(a, as_term).get(), max_steps, &d));
      print_diagram(Diagram(d).get());
    } else if (*soundness) {
      if (!all_rules && rule.empty()) usage_error("UsageError", "soundness needs --rule R or --all");
      int ok = 0;
      char* json = nullptr;
      check(zx_soundness(all_rules ? nullptr : rule.c_str(), tolerance, &ok, &json));
      std::cout << take(json) << "\n";
      return ok ? kOk : kFailed;
    } else if (*laws) {
      int ok = 0;
      char* json = nullptr;
      check(zx_check_laws(law.c_str(), seed, cases, &ok, &json));
      std::cout << take(json) << "\n";
      return ok ? kOk : kFailed;
    } else if (*serve) {
      std::cerr << "serving on http://" << host << ":" << port << "\n";
      check(zx_serve(host.c_str(), port, snapshot.empty() ? nullptr : snapshot.c_str()));
    } else if (*export_rules) {
      char* list = nullptr;
      check(zx_rules_json(&list));
      const std::string rules_json = take(list);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) usage_error("IoError", "cannot create " + dir);
      std::vector<std::string> names;
      const nlohmann::json listed = nlohmann::json::parse(rules_json);
      for (const auto& v : listed.at("rules")) names.push_back(v.at("name").get<std::string>());
      std::size_t written = 0;
      for (const std::string& name : names) {
        if (!every_variant && name.find('/') != std::string::npos) continue;
        char* json = nullptr;
        check(zx_rule_json(name.c_str(), &json));
        std::ofstream(std::filesystem::path(dir) / file_name_for(name)) << take(json) << "\n";
        ++written;
      }
      std::cout << nlohmann::json{{"written", written}, {"dir", dir}}.dump() << "\n";
    }
  } catch (const CliError& e) {
    return e.exit_code;
  }
  return kOk;
}
