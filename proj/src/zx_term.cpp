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

#include "zxbicat/zx_term.hpp"

#include <cctype>
#include <limits>

#include "zxbicat/error.hpp"

namespace zxbicat {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    TermPtr t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at " + std::to_string(line_) + ":" + std::to_string(col_), line_, col_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      if (pos_ == text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  std::size_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t d = static_cast<std::size_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::int32_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      advance();
    }
    return v;
  }

  Phase phase() {
    bool negative = false;
    if (at('-')) {
      negative = true;
      advance();
    }
    const std::size_t l = line_, c = col_;
    const auto num = static_cast<std::int64_t>(number());
    std::int64_t den = 1;
    if (at('/')) {
      advance();
      den = static_cast<std::int64_t>(number());
      if (den == 0) throw Error(ErrorCode::SyntaxError, "zero phase denominator at " + std::to_string(l) + ":" + std::to_string(c), l, c);
    }
    return Phase(negative ? -num : num, den);
  }

  std::shared_ptr<Term> node(Term::Kind k, std::size_t l, std::size_t c) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->line = l;
    t->column = c;
    return t;
  }

  TermPtr term() {
    TermPtr t = primary();
    while (at('^')) {
      auto d = node(Term::Kind::Dagger, line_, col_);
      advance();
      d->left = t;
      t = d;
    }
    return t;
  }

  TermPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a term but input ended");
    const std::size_t l = line_, c = col_;
    if (text_[pos_] == '(') {
      advance();
      TermPtr first = term();
      Term::Kind op;
      if (at(';')) {
        op = Term::Kind::Compose;
      } else if (at('+')) {
        op = Term::Kind::Tensor;
      } else {
        if (pos_ == text_.size()) fail("expected ';' or '+' but input ended");
        fail("expected ';' or '+'");
      }
      const char sym = op == Term::Kind::Compose ? ';' : '+';
      TermPtr acc = first;
      while (at(sym)) {
        advance();
        auto n = node(op, l, c);
        n->left = acc;
        n->right = term();
        acc = n;
      }
      expect(')');
      return acc;
    }
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      word += text_[pos_];
      advance();
    }
    if (word.empty()) fail("expected a term");
    if (word == "g" || word == "r") {
      auto t = node(Term::Kind::Generator, l, c);
      t->generator = word == "g" ? GeneratorKind::Green : GeneratorKind::Red;
      expect('[');
      t->m = number();
      expect(',');
      t->n = number();
      expect(',');
      t->phase = phase();
      expect(']');
      return t;
    }
    if (word == "h" || word == "w" || word == "d") {
      auto t = node(Term::Kind::Generator, l, c);
      t->generator = word == "h" ? GeneratorKind::Hadamard : word == "w" ? GeneratorKind::Wire : GeneratorKind::Diamond;
      t->m = t->n = word == "d" ? 0 : 1;
      return t;
    }
    if (word == "id" || word == "cup" || word == "cap") {
      auto t = node(word == "id" ? Term::Kind::Id : word == "cup" ? Term::Kind::Cup : Term::Kind::Cap, l, c);
      expect('[');
      t->m = number();
      expect(']');
      return t;
    }
    if (word == "sw") {
      auto t = node(Term::Kind::Swap, l, c);
      expect('[');
      t->m = number();
      expect(',');
      t->n = number();
      expect(']');
      return t;
    }
    throw Error(ErrorCode::SyntaxError, "unknown generator '" + word + "' at " + std::to_string(l) + ":" + std::to_string(c), l, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void arity_error(const Term& t, const std::string& what) {
  throw Error(ErrorCode::ArityMismatch,
              what + " at " + std::to_string(t.line) + ":" + std::to_string(t.column), t.line, t.column);
}

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Generator:
      switch (t.generator) {
        case GeneratorKind::Green:
        case GeneratorKind::Red:
          return std::string(t.generator == GeneratorKind::Green ? "g" : "r") + "[" + std::to_string(t.m) + "," +
                 std::to_string(t.n) + "," + std::to_string(t.phase.num()) + "/" + std::to_string(t.phase.den()) + "]";
        case GeneratorKind::Hadamard: return "h";
        case GeneratorKind::Wire: return "w";
        case GeneratorKind::Diamond: return "d";
      }
      break;
    case Term::Kind::Id: return "id[" + std::to_string(t.m) + "]";
    case Term::Kind::Swap: return "sw[" + std::to_string(t.m) + "," + std::to_string(t.n) + "]";
    case Term::Kind::Cup: return "cup[" + std::to_string(t.m) + "]";
    case Term::Kind::Cap: return "cap[" + std::to_string(t.m) + "]";
    case Term::Kind::Compose: return "(" + to_string(*t.left) + " ; " + to_string(*t.right) + ")";
    case Term::Kind::Tensor: return "(" + to_string(*t.left) + " + " + to_string(*t.right) + ")";
    case Term::Kind::Dagger: return to_string(*t.left) + "^";
  }
  return {};
}

std::pair<std::size_t, std::size_t> arity(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Generator:
      if ((t.generator == GeneratorKind::Hadamard || t.generator == GeneratorKind::Wire) && (t.m != 1 || t.n != 1)) {
        arity_error(t, "generator needs one input and one output");
      }
      if (t.generator == GeneratorKind::Diamond && (t.m != 0 || t.n != 0)) arity_error(t, "diamond has no legs");
      return {t.m, t.n};
    case Term::Kind::Id: return {t.m, t.m};
    case Term::Kind::Swap: return {t.m + t.n, t.m + t.n};
    case Term::Kind::Cup: return {2 * t.m, 0};
    case Term::Kind::Cap: return {0, 2 * t.m};
    case Term::Kind::Compose: {
      const auto a = arity(*t.left);
      const auto b = arity(*t.right);
      if (a.second != b.first) {
        arity_error(t, "composing " + std::to_string(a.second) + " outputs with " + std::to_string(b.first) + " inputs");
      }
      return {a.first, b.second};
    }
    case Term::Kind::Tensor: {
      const auto a = arity(*t.left);
      const auto b = arity(*t.right);
      return {a.first + b.first, a.second + b.second};
    }
    case Term::Kind::Dagger: {
      const auto a = arity(*t.left);
      return {a.second, a.first};
    }
  }
  return {0, 0};
}

OpenGraph translate(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Generator:
      arity(t);
      return generator(t.generator, t.m, t.n, t.phase);
    case Term::Kind::Id: return identity(t.m);
    case Term::Kind::Swap: return twist(t.m, t.n);
    case Term::Kind::Cup: return evaluation(t.m);
    case Term::Kind::Cap: return coevaluation(t.m);
    case Term::Kind::Compose: {
      arity(t);
      return compose(translate(*t.left), translate(*t.right));
    }
    case Term::Kind::Tensor: return tensor(translate(*t.left), translate(*t.right));
    case Term::Kind::Dagger: return dagger(translate(*t.left));
  }
  return {};
}

TermPtr make_generator(GeneratorKind k, std::size_t m, std::size_t n, Phase p) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Generator;
  t->generator = k;
  t->m = m;
  t->n = n;
  t->phase = p;
  return t;
}

TermPtr make_compose(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Compose;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TermPtr make_tensor(TermPtr a, TermPtr b) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Tensor;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

TermPtr make_dagger(TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Dagger;
  t->left = std::move(a);
  return t;
}

TermPtr make_structural(Term::Kind k, std::size_t m, std::size_t n) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->m = m;
  t->n = n;
  return t;
}

}  // namespace zxbicat
