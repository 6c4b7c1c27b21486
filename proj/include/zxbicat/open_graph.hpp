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

#include <cstddef>
#include <string>
#include <vector>

#include "zxbicat/graph.hpp"

namespace zxbicat {

/// A cospan N(X) -> body <- N(Y). The interface maps are the ordered lists
/// `inputs` and `outputs`; position i of a list is the image of interface
/// node i. Lists may repeat nodes and every listed node is labeled Open.
struct OpenGraph {
  TypedGraph body;
  std::vector<NodeId> inputs;
  std::vector<NodeId> outputs;

  std::size_t arity_in() const noexcept { return inputs.size(); }
  std::size_t arity_out() const noexcept { return outputs.size(); }

  /// Throws InvalidGraph if a listed node is missing or not Open.
  void validate() const;

  friend bool operator==(const OpenGraph&, const OpenGraph&) = default;
};

/// f then g: pushout over N(Y). Throws ArityMismatch.
OpenGraph compose(const OpenGraph& f, const OpenGraph& g);

/// Composite along with the pushout injections of the two bodies.
struct Composite {
  OpenGraph result;
  PushoutResult pushout;
};
Composite compose_with_injections(const OpenGraph& f, const OpenGraph& g);

OpenGraph tensor(const OpenGraph& f, const OpenGraph& g);
OpenGraph dagger(const OpenGraph& f);

OpenGraph identity(std::size_t n);
OpenGraph twist(std::size_t m, std::size_t n);
OpenGraph evaluation(std::size_t n);
OpenGraph coevaluation(std::size_t n);

/// Pins pairing f's interface nodes with g's positionally, inputs first.
NodePins interface_pins(const OpenGraph& f, const OpenGraph& g);

/// Boundary-pinned isomorphism f.body -> g.body, if any.
std::optional<GraphMorphism> find_open_isomorphism(const OpenGraph& f, const OpenGraph& g);
bool equal_up_to_iso(const OpenGraph& f, const OpenGraph& g);

/// Canonical key: equal iff equal_up_to_iso.
std::string canonical_key(const OpenGraph& f);

/// Inputs then outputs, as pinned nodes for canonical_form.
std::vector<NodeId> boundary_list(const OpenGraph& f);

}  // namespace zxbicat
