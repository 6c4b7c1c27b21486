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

#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "zxbicat/zx_rules.hpp"

namespace zxbicat {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Abstract syntax of zx terms. Positions are 1-based and point at the
/// first character of the construct.
struct Term {
  enum class Kind { Generator, Id, Swap, Cup, Cap, Compose, Tensor, Dagger };

  Kind kind = Kind::Id;
  GeneratorKind generator = GeneratorKind::Wire;
  std::size_t m = 0;
  std::size_t n = 0;
  Phase phase;
  TermPtr left;   ///< Compose, Tensor, Dagger
  TermPtr right;  ///< Compose, Tensor
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Grammar:
///   t ::= g[m,n,p/q] | r[m,n,p/q] | h | w | d | id[n] | sw[m,n]
///       | cup[n] | cap[n] | (t ; t) | (t + t) | t^
/// Phases are integers or fractions with an optional sign, in units of pi.
/// Throws SyntaxError carrying line and column.
TermPtr parse_term(std::string_view text);

/// Prints in the grammar above; parse_term(to_string(t)) reproduces t.
std::string to_string(const Term& t);

/// (inputs, outputs). Throws ArityMismatch at the offending position.
std::pair<std::size_t, std::size_t> arity(const Term& t);

/// Structural translation into open graphs: generators by `generator`,
/// id[n] by identity, sw by twist, cup[n] by evaluation(n), cap[n] by
/// coevaluation(n). Throws ArityMismatch at the offending position.
OpenGraph translate(const Term& t);

/// Convenience constructors.
TermPtr make_generator(GeneratorKind k, std::size_t m, std::size_t n, Phase p = {});
TermPtr make_compose(TermPtr a, TermPtr b);
TermPtr make_tensor(TermPtr a, TermPtr b);
TermPtr make_dagger(TermPtr a);
TermPtr make_structural(Term::Kind k, std::size_t m, std::size_t n = 0);

}  // namespace zxbicat
