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

#include <string>
#include <string_view>
#include <vector>

#include "zxbicat/dpo.hpp"

namespace zxbicat {

enum class GeneratorKind { Green, Red, Hadamard, Wire, Diamond };

/// Generator 1-cells. Spider bodies list the m input nodes, the spider, then
/// the n output nodes; inputs point into the spider and outputs out of it.
/// Throws ArityUnsupported for hadamard / wire unless m = n = 1 and for
/// diamond unless m = n = 0.
OpenGraph generator(GeneratorKind kind, std::size_t m, std::size_t n, Phase phase = {});
OpenGraph spider(LabelKind color, std::size_t m, std::size_t n, Phase phase = {});

/// Every spider relabelled to the other colour.
OpenGraph color_swapped(const OpenGraph& f);

/// One of the eight closure variants of a rule family. The name is the
/// family name with an optional suffix "/c" (colours exchanged), "d"
/// (daggered) and "r" (reversed), in that order, e.g. "spider/cr".
struct RuleVariant {
  std::string name;
  std::string family;
  bool color = false;
  bool dagger = false;
  bool reversed = false;
  /// Variant with the same matches; empty when this variant is canonical.
  std::string alias_of;
  /// False when no finite matcher exists in this direction.
  bool matchable = true;
};

class RuleSet {
 public:
  /// The shipped set: the eleven basic families with all closure variants.
  static const RuleSet& standard();

  const std::vector<RuleVariant>& variants() const noexcept { return variants_; }
  const std::vector<std::string>& families() const noexcept { return families_; }
  /// nullptr if unknown.
  const RuleVariant* find(std::string_view name) const;
  const RuleVariant& get(std::string_view name) const;  ///< throws UnknownRule

  /// Concrete instances used for soundness checking; spider-like families
  /// are sampled over small arities and a grid of phases.
  std::vector<RewriteRule> representatives(const RuleVariant& v) const;
  RewriteRule representative(const RuleVariant& v) const;

  /// Applicable matches of a variant in `host`, deterministic order. Matches
  /// of alias variants are those of their target, renamed.
  std::vector<Match> matches(const RuleVariant& v, const OpenGraph& host) const;
  std::vector<Match> matches(std::string_view name, const OpenGraph& host) const;

 private:
  RuleSet();
  std::vector<RuleVariant> variants_;
  std::vector<std::string> families_;
};

/// The twelve phases k/6 pi, k = -6 .. 5.
std::vector<Phase> phase_grid();

}  // namespace zxbicat
