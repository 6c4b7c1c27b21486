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

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "zxbicat/dpo.hpp"

namespace zxbicat {

using Complex = std::complex<double>;

/// Dense row-major matrix. An open graph m -> n evaluates to 2^n rows and
/// 2^m columns; the first wire of an interface is the most significant bit.
struct ComplexMatrix {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<Complex> data{Complex(1.0)};

  ComplexMatrix() = default;
  ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Complex& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double norm_inf() const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);  ///< a * b
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Green(0) state contracted with red(0) effect.
Complex diamond_scalar();

/// Tensor-network value. Open nodes are wires; their degree counts edge ends
/// and interface occurrences and must be at most 2. Throws NonWireOpenNode.
ComplexMatrix eval(const OpenGraph& f);

struct Proportionality {
  bool proportional = false;
  Complex lambda;
  double deviation = 0.0;  ///< ||M - lambda N||_inf
  double bound = 0.0;      ///< tol * max(1, ||M||_inf)
};

/// M = lambda N for some nonzero lambda, within tol * max(1, ||M||_inf).
/// lambda is read off N's largest-magnitude entry. Throws ShapeMismatch.
Proportionality compare(const ComplexMatrix& m, const ComplexMatrix& n, double tol = 1e-9);
bool proportional(const ComplexMatrix& m, const ComplexMatrix& n, double tol = 1e-9);

struct SoundnessResult {
  std::string rule;
  bool sound = false;
  double deviation = 0.0;
  std::string detail;
};

SoundnessResult verify_rule_soundness(const RewriteRule& rule, double tol = 1e-9);

class RuleSet;
/// Every representative of every variant (or of `only`, if non-empty).
/// One result per variant; a variant is sound iff all its instances are.
std::vector<SoundnessResult> check_rule_set(const RuleSet& rules, const std::string& only = {},
                                            double tol = 1e-9);

}  // namespace zxbicat
