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

#include "zxbicat/open_graph.hpp"

namespace zxbicat {

/// A span of cospans dom <- apex -> cod over fixed feet. Legs are maps of
/// bodies and must send apex interface position i to position i.
struct TwoCell {
  OpenGraph dom;
  OpenGraph cod;
  OpenGraph apex;
  GraphMorphism leg_down;  ///< apex.body -> dom.body
  GraphMorphism leg_up;    ///< apex.body -> cod.body

  /// Throws InvalidMorphism if a leg is not a morphism or a square fails.
  void validate() const;
  bool is_valid() const noexcept;
};

TwoCell identity_2cell(const OpenGraph& f);

/// a : f => g then b : g => h. Throws MiddleMismatch unless a.cod and b.dom
/// are isomorphic over their feet.
TwoCell vertical_compose(const TwoCell& a, const TwoCell& b);

/// a over X -> Y beside b over Y -> Z. Throws ArityMismatch.
TwoCell horizontal_compose(const TwoCell& a, const TwoCell& b);

TwoCell tensor_2cells(const TwoCell& a, const TwoCell& b);
TwoCell reverse(const TwoCell& a);

/// Same parallel class: dom and cod agree up to pinned iso.
bool parallel_equal(const TwoCell& a, const TwoCell& b);

}  // namespace zxbicat
