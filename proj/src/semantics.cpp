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

#include "zxbicat/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "zxbicat/error.hpp"
#include "zxbicat/zx_rules.hpp"

namespace zxbicat {

double ComplexMatrix::norm_inf() const {
  double m = 0.0;
  for (const Complex& z : data) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) throw Error(ErrorCode::ShapeMismatch, "matrix product shapes differ");
  ComplexMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Complex x = a.at(i, k);
      if (x == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      for (std::size_t k = 0; k < b.rows; ++k) {
        for (std::size_t l = 0; l < b.cols; ++l) out.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = std::conj(a.at(i, j));
  }
  return out;
}

namespace {

Complex spider_entry(LabelKind kind, const Phase& phase, const std::vector<int>& bits) {
  const Complex e = std::polar(1.0, phase.radians());
  if (kind == LabelKind::Green) {
    const bool zeros = std::all_of(bits.begin(), bits.end(), [](int b) { return b == 0; });
    const bool ones = std::all_of(bits.begin(), bits.end(), [](int b) { return b == 1; });
    return (zeros ? Complex(1.0) : Complex(0.0)) + (ones ? e : Complex(0.0));
  }
  const int parity = std::accumulate(bits.begin(), bits.end(), 0) & 1;
  const double scale = std::pow(std::sqrt(0.5), static_cast<double>(bits.size()));
  return scale * (Complex(1.0) + (parity ? -e : e));
}

struct Tensor {
  std::vector<int> vars;  // sorted, distinct; vars[i] is bit i of the index
  std::vector<Complex> data;
};

std::size_t index_of(const std::vector<int>& vars, const std::map<int, int>& value) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (value.at(vars[i])) idx |= std::size_t{1} << i;
  }
  return idx;
}

Tensor make_tensor(const std::vector<int>& legs, const std::function<Complex(const std::vector<int>&)>& f) {
  Tensor t;
  t.vars = legs;
  std::sort(t.vars.begin(), t.vars.end());
  t.vars.erase(std::unique(t.vars.begin(), t.vars.end()), t.vars.end());
  t.data.resize(std::size_t{1} << t.vars.size());
  std::vector<int> bits(legs.size());
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
      const auto pos = std::lower_bound(t.vars.begin(), t.vars.end(), legs[i]) - t.vars.begin();
      bits[i] = static_cast<int>((idx >> pos) & 1);
    }
    t.data[idx] = f(bits);
  }
  return t;
}

Tensor multiply(const Tensor& a, const Tensor& b) {
  Tensor t;
  std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(t.vars));
  t.data.resize(std::size_t{1} << t.vars.size());
  std::vector<std::size_t> pa, pb;  // bit positions in t for each var of a, b
  for (int v : a.vars) pa.push_back(std::lower_bound(t.vars.begin(), t.vars.end(), v) - t.vars.begin());
  for (int v : b.vars) pb.push_back(std::lower_bound(t.vars.begin(), t.vars.end(), v) - t.vars.begin());
  for (std::size_t idx = 0; idx < t.data.size(); ++idx) {
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) ia |= ((idx >> pa[i]) & 1) << i;
    for (std::size_t i = 0; i < pb.size(); ++i) ib |= ((idx >> pb[i]) & 1) << i;
    t.data[idx] = a.data[ia] * b.data[ib];
  }
  return t;
}

Tensor sum_out(const Tensor& a, int var) {
  const auto pos = static_cast<std::size_t>(std::find(a.vars.begin(), a.vars.end(), var) - a.vars.begin());
  Tensor t;
  for (int v : a.vars) {
    if (v != var) t.vars.push_back(v);
  }
  t.data.assign(std::size_t{1} << t.vars.size(), Complex(0.0));
  for (std::size_t idx = 0; idx < a.data.size(); ++idx) {
    const std::size_t low = idx & ((std::size_t{1} << pos) - 1);
    const std::size_t high = (idx >> (pos + 1)) << pos;
    t.data[low | high] += a.data[idx];
  }
  return t;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
  int find(int x) {
    while (p_[x] != x) x = p_[x] = p_[p_[x]];
    return x;
  }
  void unite(int a, int b) { p_[find(a)] = find(b); }

 private:
  std::vector<int> p_;
};

}  // namespace

Complex diamond_scalar() {
  Complex sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    sum += spider_entry(LabelKind::Green, Phase(), {i}) * spider_entry(LabelKind::Red, Phase(), {i});
  }
  return sum;
}

ComplexMatrix eval(const OpenGraph& f) {
  f.validate();
  const TypedGraph& g = f.body;
  const int ne = static_cast<int>(g.edge_count());
  const int ni = static_cast<int>(f.inputs.size());
  const int no = static_cast<int>(f.outputs.size());
  // Items: edges, then input positions, then output positions.
  DisjointSets items(static_cast<std::size_t>(ne + ni + no));
  std::vector<std::vector<int>> at(g.node_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    at[g.edge(e).src].push_back(static_cast<int>(e));
    at[g.edge(e).tgt].push_back(static_cast<int>(e));
  }
  for (int i = 0; i < ni; ++i) at[f.inputs[i]].push_back(ne + i);
  for (int i = 0; i < no; ++i) at[f.outputs[i]].push_back(ne + ni + i);

  Complex scalar = 1.0;
  std::vector<Tensor> tensors;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const NodeLabel& l = g.label(v);
    if (l.is_open()) {
      if (at[v].size() > 2) {
        throw Error(ErrorCode::NonWireOpenNode,
                    "open node " + std::to_string(v) + " has degree " + std::to_string(at[v].size()));
      }
      if (at[v].size() == 2) items.unite(at[v][0], at[v][1]);
      if (at[v].empty()) scalar *= 2.0;
    }
  }
  std::vector<char> used(static_cast<std::size_t>(ne + ni + no), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const NodeLabel& l = g.label(v);
    if (l.is_open()) continue;
    std::vector<int> legs;
    for (int item : at[v]) legs.push_back(items.find(item));
    for (int c : legs) used[c] = 1;
    switch (l.kind()) {
      case LabelKind::Green:
      case LabelKind::Red:
        tensors.push_back(make_tensor(legs, [&](const std::vector<int>& bits) {
          return spider_entry(l.kind(), l.phase(), bits);
        }));
        break;
      case LabelKind::Hadamard:
        if (legs.size() != 2) throw Error(ErrorCode::InvalidGraph, "hadamard node needs exactly two legs");
        tensors.push_back(make_tensor(legs, [](const std::vector<int>& bits) {
          return Complex(std::sqrt(0.5) * ((bits[0] & bits[1]) ? -1.0 : 1.0));
        }));
        break;
      case LabelKind::Diamond:
        scalar *= diamond_scalar();
        break;
      case LabelKind::Open:
        break;
    }
  }
  std::vector<int> position_class;
  for (int i = 0; i < ni + no; ++i) {
    const int c = items.find(ne + i);
    position_class.push_back(c);
    used[c] = 1;
  }
  std::set<int> external(position_class.begin(), position_class.end());
  // Edge classes touching nothing are closed loops.
  std::set<int> classes;
  for (int e = 0; e < ne; ++e) classes.insert(items.find(e));
  for (int c : classes) {
    if (!used[c]) scalar *= 2.0;
  }

  // Variable elimination, smallest intermediate first.
  std::set<int> internal;
  for (const Tensor& t : tensors) {
    for (int v : t.vars) {
      if (!external.count(v)) internal.insert(v);
    }
  }
  while (!internal.empty()) {
    int best = -1;
    std::size_t best_size = 0;
    for (int v : internal) {
      std::set<int> vars;
      for (const Tensor& t : tensors) {
        if (std::binary_search(t.vars.begin(), t.vars.end(), v)) vars.insert(t.vars.begin(), t.vars.end());
      }
      if (best < 0 || vars.size() < best_size) {
        best = v;
        best_size = vars.size();
      }
    }
    Tensor acc;
    acc.data = {Complex(1.0)};
    std::vector<Tensor> rest;
    for (Tensor& t : tensors) {
      if (std::binary_search(t.vars.begin(), t.vars.end(), best)) {
        acc = multiply(acc, t);
      } else {
        rest.push_back(std::move(t));
      }
    }
    rest.push_back(sum_out(acc, best));
    tensors = std::move(rest);
    internal.erase(best);
  }
  Tensor final_t;
  final_t.data = {scalar};
  for (const Tensor& t : tensors) final_t = multiply(final_t, t);

  ComplexMatrix out(std::size_t{1} << no, std::size_t{1} << ni);
  std::map<int, int> value;
  for (std::size_t r = 0; r < out.rows; ++r) {
    for (std::size_t c = 0; c < out.cols; ++c) {
      value.clear();
      bool consistent = true;
      auto assign = [&](int cls, int bit) {
        auto [it, inserted] = value.emplace(cls, bit);
        if (!inserted && it->second != bit) consistent = false;
      };
      for (int i = 0; i < ni; ++i) assign(position_class[i], static_cast<int>((c >> (ni - 1 - i)) & 1));
      for (int i = 0; i < no; ++i) assign(position_class[ni + i], static_cast<int>((r >> (no - 1 - i)) & 1));
      out.at(r, c) = consistent ? final_t.data[index_of(final_t.vars, value)] : Complex(0.0);
    }
  }
  return out;
}

Proportionality compare(const ComplexMatrix& m, const ComplexMatrix& n, double tol) {
  if (m.rows != n.rows || m.cols != n.cols) {
    throw Error(ErrorCode::ShapeMismatch, std::to_string(m.rows) + "x" + std::to_string(m.cols) + " vs " +
                                              std::to_string(n.rows) + "x" + std::to_string(n.cols));
  }
  Proportionality p;
  const double mnorm = m.norm_inf();
  p.bound = tol * std::max(1.0, mnorm);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n.data.size(); ++i) {
    if (std::abs(n.data[i]) > std::abs(n.data[k])) k = i;
  }
  if (std::abs(n.data[k]) <= tol) {
    // N vanishes numerically: every lambda gives ||lambda N|| <= tol |lambda|
    p.lambda = 1.0;
    p.deviation = mnorm;
    p.proportional = mnorm <= p.bound;
    return p;
  }
  p.lambda = m.data[k] / n.data[k];
  for (std::size_t i = 0; i < m.data.size(); ++i) p.deviation = std::max(p.deviation, std::abs(m.data[i] - p.lambda * n.data[i]));
  p.proportional = p.lambda != Complex(0.0) && p.deviation <= p.bound;
  return p;
}

bool proportional(const ComplexMatrix& m, const ComplexMatrix& n, double tol) { return compare(m, n, tol).proportional; }

SoundnessResult verify_rule_soundness(const RewriteRule& rule, double tol) {
  SoundnessResult r;
  r.rule = rule.name;
  const auto p = compare(eval(rule.lhs), eval(rule.rhs), tol);
  r.sound = p.proportional;
  r.deviation = p.deviation;
  if (!r.sound) {
    r.detail = "max deviation " + std::to_string(p.deviation) + " exceeds " + std::to_string(p.bound);
  }
  return r;
}

std::vector<SoundnessResult> check_rule_set(const RuleSet& rules, const std::string& only, double tol) {
  std::vector<SoundnessResult> out;
  bool found = only.empty();
  for (const RuleVariant& v : rules.variants()) {
    if (!only.empty() && v.name != only) continue;
    found = true;
    SoundnessResult agg;
    agg.rule = v.name;
    agg.sound = true;
    std::size_t count = 0;
    for (const RewriteRule& r : rules.representatives(v)) {
      ++count;
      const SoundnessResult s = verify_rule_soundness(r, tol);
      agg.deviation = std::max(agg.deviation, s.deviation);
      if (!s.sound && agg.sound) {
        agg.sound = false;
        agg.detail = "instance " + std::to_string(count - 1) + ": " + s.detail;
      }
    }
    if (agg.sound) agg.detail = std::to_string(count) + " instances";
    out.push_back(std::move(agg));
  }
  if (!found) throw Error(ErrorCode::UnknownRule, "unknown rule " + only);
  return out;
}

}  // namespace zxbicat
