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

#include <compare>
#include <cstdint>
#include <string>

namespace zxbicat {

/// An exact rational multiple of pi, kept in lowest terms and reduced into
/// the half-open interval [-pi, pi). The label "pi" is therefore stored as
/// -pi (num = -1, den = 1).
class Phase {
 public:
  constexpr Phase() = default;
  /// (num / den) * pi, normalized. Throws InvalidArgument if den == 0.
  Phase(std::int64_t num, std::int64_t den);

  static Phase zero() { return Phase(); }
  static Phase pi() { return Phase(1, 1); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_pi() const noexcept { return num_ == -1 && den_ == 1; }

  /// Radians, for numerical evaluation only.
  double radians() const noexcept;

  /// "p/q" with the pi factor implicit; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase&, const Phase&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Phase phase_add(const Phase& a, const Phase& b);
Phase phase_negate(const Phase& a);

inline Phase operator+(const Phase& a, const Phase& b) { return phase_add(a, b); }
inline Phase operator-(const Phase& a) { return phase_negate(a); }

enum class LabelKind : std::uint8_t { Open, Green, Red, Hadamard, Diamond };

/// A node of the structure graph S_zx. Spiders carry a phase; every other
/// kind carries the zero phase.
class NodeLabel {
 public:
  constexpr NodeLabel() = default;

  static NodeLabel open() { return NodeLabel(LabelKind::Open, Phase()); }
  static NodeLabel green(Phase p) { return NodeLabel(LabelKind::Green, p); }
  static NodeLabel red(Phase p) { return NodeLabel(LabelKind::Red, p); }
  static NodeLabel hadamard() { return NodeLabel(LabelKind::Hadamard, Phase()); }
  static NodeLabel diamond() { return NodeLabel(LabelKind::Diamond, Phase()); }
  static NodeLabel spider(LabelKind color, Phase p);

  LabelKind kind() const noexcept { return kind_; }
  const Phase& phase() const noexcept { return phase_; }
  bool is_open() const noexcept { return kind_ == LabelKind::Open; }
  bool is_spider() const noexcept {
    return kind_ == LabelKind::Green || kind_ == LabelKind::Red;
  }
  bool has_phase() const noexcept { return is_spider(); }

  /// Same kind, phase replaced. Only meaningful for spiders.
  NodeLabel with_phase(Phase p) const;
  /// Green <-> Red; identity on the other kinds.
  NodeLabel color_swapped() const;
  /// Spider phases negated; identity on the other kinds.
  NodeLabel daggered() const;

  /// Compact token used in canonical forms and error messages.
  std::string token() const;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;

 private:
  constexpr NodeLabel(LabelKind k, Phase p) : kind_(k), phase_(p) {}

  LabelKind kind_ = LabelKind::Open;
  Phase phase_;
};

LabelKind swap_color(LabelKind k);

/// Whether S_zx has an arrow from `src`'s node to `tgt`'s node: every
/// non-diamond kind has exactly one arrow to and from the open node, and the
/// open node carries a self-loop. Diamond is isolated.
bool edge_permitted(const NodeLabel& src, const NodeLabel& tgt);

}  // namespace zxbicat
