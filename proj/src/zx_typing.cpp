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

#include "zxbicat/zx_typing.hpp"

#include <numbers>
#include <numeric>

#include "zxbicat/error.hpp"

namespace zxbicat {

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "phase denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  // reduce num/den mod 2 into [-1, 1)
  const std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  if (num >= den) num -= period;
  num_ = num;
  den_ = den;
  if (num_ == 0) den_ = 1;
}

double Phase::radians() const noexcept {
  return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Phase::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase phase_add(const Phase& a, const Phase& b) {
  const std::int64_t l = std::lcm(a.den(), b.den());
  return Phase(a.num() * (l / a.den()) + b.num() * (l / b.den()), l);
}

Phase phase_negate(const Phase& a) { return Phase(-a.num(), a.den()); }

LabelKind swap_color(LabelKind k) {
  if (k == LabelKind::Green) return LabelKind::Red;
  if (k == LabelKind::Red) return LabelKind::Green;
  return k;
}

NodeLabel NodeLabel::spider(LabelKind color, Phase p) {
  if (color != LabelKind::Green && color != LabelKind::Red) {
    throw Error(ErrorCode::InvalidArgument, "spider color must be green or red");
  }
  return NodeLabel(color, p);
}

NodeLabel NodeLabel::with_phase(Phase p) const {
  return is_spider() ? NodeLabel(kind_, p) : *this;
}

NodeLabel NodeLabel::color_swapped() const {
  return NodeLabel(swap_color(kind_), phase_);
}

NodeLabel NodeLabel::daggered() const {
  return is_spider() ? NodeLabel(kind_, -phase_) : *this;
}

std::string NodeLabel::token() const {
  switch (kind_) {
    case LabelKind::Open: return "o";
    case LabelKind::Green: return "g" + phase_.to_string();
    case LabelKind::Red: return "r" + phase_.to_string();
    case LabelKind::Hadamard: return "h";
    case LabelKind::Diamond: return "d";
  }
  return "?";
}

bool edge_permitted(const NodeLabel& src, const NodeLabel& tgt) {
  if (src.kind() == LabelKind::Diamond || tgt.kind() == LabelKind::Diamond) return false;
  return src.is_open() || tgt.is_open();
}

}  // namespace zxbicat
