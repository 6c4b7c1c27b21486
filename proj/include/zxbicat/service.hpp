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

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include "zxbicat/open_graph.hpp"

namespace zxbicat {

/// Content-addressed, insert-only diagram store. With a snapshot directory
/// every stored diagram is also written there as <id>.json, and existing
/// files are loaded on construction.
class DiagramStore {
 public:
  explicit DiagramStore(std::optional<std::filesystem::path> snapshot = std::nullopt);

  std::string put(const OpenGraph& f);
  std::optional<OpenGraph> get(const std::string& id) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, OpenGraph> diagrams_;
  std::optional<std::filesystem::path> snapshot_;
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

/// The JSON API. `handle` does the routing and is usable without a socket;
/// `listen` serves it over HTTP until `stop` is called.
class Service {
 public:
  explicit Service(std::optional<std::filesystem::path> snapshot = std::nullopt);
  ~Service();

  HttpResponse handle(const std::string& method, const std::string& path, const std::string& body);

  /// Blocks. Port 0 picks a free port, readable through `port` once bound.
  bool listen(const std::string& host, int port);
  /// Binds without serving; returns the port or -1.
  int bind(const std::string& host, int port);
  /// Serves on a socket opened by `bind`. Blocks.
  bool serve_bound();
  void stop();
  int port() const noexcept { return port_; }

 private:
  struct Impl;
  DiagramStore store_;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

}  // namespace zxbicat
