/* Copyright 2026 The xpulse Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "xpulse/coupling_basis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace xpulse {

namespace {

bool triangle_ok(int two_j1, int two_j2, int two_cap_j) {
  if (two_cap_j < std::abs(two_j1 - two_j2)) return false;
  if (two_cap_j > two_j1 + two_j2) return false;
  return (two_j1 + two_j2 + two_cap_j) % 2 == 0;
}

// sqrt(j(j+1) - m(m+1)) for the raising operator, in twice-integer units
double raise_factor(int two_j, int two_m) {
  const double j = two_j / 2.0, m = two_m / 2.0;
  const double v = j * (j + 1) - m * (m + 1);
  return v > 0 ? std::sqrt(v) : 0.0;
}

// Coefficients of the highest-weight state |J J> = sum c_{m1} |j1 m1>|j2 J-m1>,
// from annihilation by the total raising operator, Condon-Shortley sign.
std::map<int, double> highest_weight(int two_j1, int two_j2, int two_cap_j) {
  const int lo = std::max(-two_j1, two_cap_j - two_j2);
  const int hi = std::min(two_j1, two_cap_j + two_j2);
  std::map<int, double> c;
  c[hi] = 1.0;
  for (int two_m1 = hi; two_m1 - 2 >= lo; two_m1 -= 2) {
    const double a = raise_factor(two_j1, two_m1 - 2);
    const double b = raise_factor(two_j2, two_cap_j - two_m1);
    c[two_m1 - 2] = -b * c[two_m1] / a;
  }
  double norm = 0.0;
  for (auto& [m, v] : c) norm += v * v;
  norm = std::sqrt(norm);
  const double sign = c[hi] > 0 ? 1.0 : -1.0;
  for (auto& [m, v] : c) v *= sign / norm;
  return c;
}

struct CgKey {
  int a, b, c, d, e, f;
  bool operator<(const CgKey& o) const {
    return std::tie(a, b, c, d, e, f) < std::tie(o.a, o.b, o.c, o.d, o.e, o.f);
  }
};

}  // namespace

double cg_coefficient(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_cap_j, int two_cap_m) {
  static std::map<CgKey, double> cache;
  static std::mutex cache_mutex;
  if (two_m1 + two_m2 != two_cap_m) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 ||
      std::abs(two_cap_m) > two_cap_j)
    return 0.0;
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0) return 0.0;
  if (!triangle_ok(two_j1, two_j2, two_cap_j)) return 0.0;

  const CgKey key{two_j1, two_m1, two_j2, two_m2, two_cap_j, two_cap_m};
  {
    std::scoped_lock lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  double value;
  if (two_cap_m == two_cap_j) {
    auto c = highest_weight(two_j1, two_j2, two_cap_j);
    auto it = c.find(two_m1);
    value = it == c.end() ? 0.0 : it->second;
  } else {
    // Lower from M+1 with the total lowering operator.
    const double f = raise_factor(two_cap_j, two_cap_m);
    const double a =
        raise_factor(two_j1, two_m1) * cg_coefficient(two_j1, two_m1 + 2,
                                                      two_j2, two_m2,
                                                      two_cap_j, two_cap_m + 2);
    const double b =
        raise_factor(two_j2, two_m2) * cg_coefficient(two_j1, two_m1, two_j2,
                                                      two_m2 + 2, two_cap_j,
                                                      two_cap_m + 2);
    value = (a + b) / f;
  }
  std::scoped_lock lock(cache_mutex);
  cache[key] = value;
  return value;
}

double cg_coefficient(double j1, double m1, double j2, double m2, double cap_j,
                      double cap_m) {
  auto twice = [](double x) {
    const double t = 2.0 * x;
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-9)
      throw std::invalid_argument("quantum number must be half-integer");
    return static_cast<int>(r);
  };
  return cg_coefficient(twice(j1), twice(m1), twice(j2), twice(m2),
                        twice(cap_j), twice(cap_m));
}

CouplingTree CouplingTree::leaf(int spin_index) {
  CouplingTree t;
  t.two_j_ = 1;
  t.spin_index_ = spin_index;
  return t;
}

CouplingTree CouplingTree::couple(CouplingTree left, CouplingTree right,
                                  int two_j) {
  CouplingTree t;
  t.two_j_ = two_j;
  t.left_ = std::make_shared<const CouplingTree>(std::move(left));
  t.right_ = std::make_shared<const CouplingTree>(std::move(right));
  return t;
}

std::vector<int> CouplingTree::leaves() const {
  validate();
  std::vector<int> out;
  const auto walk = [&out](auto&& self, const CouplingTree& n) -> void {
    if (n.is_leaf()) {
      out.push_back(n.spin_index());
      return;
    }
    self(self, n.left());
    self(self, n.right());
  };
  walk(walk, *this);
  return out;
}

void CouplingTree::validate() const {
  std::set<int> seen;
  const auto walk = [&seen](auto&& self, const CouplingTree& n) -> void {
    if (n.is_leaf()) {
      if (n.two_j() != 1) throw std::invalid_argument("leaf must be spin-1/2");
      if (!seen.insert(n.spin_index()).second)
        throw std::invalid_argument("duplicate leaf index in coupling tree");
      return;
    }
    if (!triangle_ok(n.left().two_j(), n.right().two_j(), n.two_j()))
      throw std::invalid_argument("coupling label violates triangle rule");
    self(self, n.left());
    self(self, n.right());
  };
  walk(walk, *this);
}

namespace {

// Amplitudes over the product basis of the node's own leaves (left-to-right
// bit order, bit 0 = up).
std::map<int, double> build_component(const CouplingTree& node, int two_m) {
  std::map<int, double> out;
  if (node.is_leaf()) {
    if (two_m == 1) out[0] = 1.0;
    if (two_m == -1) out[1] = 1.0;
    return out;
  }
  const int width_r = static_cast<int>(node.right().leaves().size());
  for (int two_m1 = -node.left().two_j(); two_m1 <= node.left().two_j();
       two_m1 += 2) {
    const int two_m2 = two_m - two_m1;
    const double c = cg_coefficient(node.left().two_j(), two_m1,
                                    node.right().two_j(), two_m2, node.two_j(),
                                    two_m);
    if (c == 0.0) continue;
    const auto l = build_component(node.left(), two_m1);
    const auto r = build_component(node.right(), two_m2);
    for (const auto& [kl, al] : l)
      for (const auto& [kr, ar] : r) out[(kl << width_r) | kr] += c * al * ar;
  }
  return out;
}

}  // namespace

Vector coupled_state(const CouplingTree& tree, int two_m, int n_spins) {
  tree.validate();
  const std::vector<int> leaves = tree.leaves();
  for (int idx : leaves)
    if (idx < 0 || idx >= n_spins)
      throw std::out_of_range("tree leaf outside the register");
  const auto comp = build_component(tree, two_m);
  const int k = static_cast<int>(leaves.size());
  Vector v = Vector::Zero(1 << n_spins);
  for (const auto& [bits, amp] : comp) {
    int s = 0;
    for (int pos = 0; pos < k; ++pos) {
      const int b = (bits >> (k - 1 - pos)) & 1;
      s |= b << (n_spins - 1 - leaves[pos]);
    }
    v(s) += amp;
  }
  return v;
}

Matrix recoupling_matrix(const std::vector<CouplingTree>& source,
                         const std::vector<CouplingTree>& target,
                         int n_spins) {
  if (source.empty() || source.size() != target.size())
    throw std::invalid_argument("bases must be nonempty and equal-sized");
  int two_m = source.front().two_j();
  for (const auto& t : source) two_m = std::min(two_m, t.two_j());
  for (const auto& t : target) two_m = std::min(two_m, t.two_j());

  const int k = static_cast<int>(source.size());
  std::vector<Vector> s(k), t(k);
  for (int a = 0; a < k; ++a) {
    s[a] = coupled_state(source[a], two_m, n_spins);
    t[a] = coupled_state(target[a], two_m, n_spins);
  }
  // Equal spans: projectors must agree.
  const int dim = 1 << n_spins;
  Matrix ps = Matrix::Zero(dim, dim), pt = Matrix::Zero(dim, dim);
  for (int a = 0; a < k; ++a) {
    ps += s[a] * s[a].adjoint();
    pt += t[a] * t[a].adjoint();
  }
  if ((ps - pt).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("source and target bases span different spaces");

  Matrix m(k, k);
  for (int row = 0; row < k; ++row)
    for (int col = 0; col < k; ++col) m(row, col) = t[row].dot(s[col]);
  return m;
}

namespace {
Matrix unit_vector_sigma(double x, double z) {
  Matrix m(2, 2);
  m << z, x, x, -z;
  return m;
}
}  // namespace

Matrix analytic_f(RecouplingKind kind) {
  switch (kind) {
    case RecouplingKind::F1:
      return unit_vector_sigma(std::sqrt(3.0) / 2.0, -0.5);
    case RecouplingKind::F2:
      return unit_vector_sigma(std::sqrt(2.0 / 3.0), -1.0 / std::sqrt(3.0));
    case RecouplingKind::F3:
      return unit_vector_sigma(2.0 * std::sqrt(2.0) / 3.0, -1.0 / 3.0);
  }
  throw std::invalid_argument("unknown recoupling kind");
}

Matrix numeric_f(RecouplingKind kind) {
  using CT = CouplingTree;
  const auto pair_tree = [](int a, int b, int two_j) {
    return CT::couple(CT::leaf(a), CT::leaf(b), two_j);
  };
  switch (kind) {
    case RecouplingKind::F1: {
      // (.(..)_a)_{1/2}  vs  ((..)_{a'}.)_{1/2} on three spins
      std::vector<CT> a_basis, ap_basis;
      for (int two_a : {0, 2}) {
        a_basis.push_back(CT::couple(CT::leaf(0), pair_tree(1, 2, two_a), 1));
        ap_basis.push_back(CT::couple(pair_tree(0, 1, two_a), CT::leaf(2), 1));
      }
      return recoupling_matrix(ap_basis, a_basis, 3);
    }
    case RecouplingKind::F2: {
      // two dots and one triangle: (.(. T)_c)_1  vs  ((..)_{b'} T)_1
      std::vector<CT> c_basis, bp_basis;
      for (int two_c : {1, 3})
        c_basis.push_back(CT::couple(
            CT::leaf(0), CT::couple(CT::leaf(1), pair_tree(2, 3, 2), two_c),
            2));
      for (int two_b : {0, 2})
        bp_basis.push_back(CT::couple(pair_tree(0, 1, two_b),
                                      pair_tree(2, 3, 2), 2));
      return recoupling_matrix(c_basis, bp_basis, 4);
    }
    case RecouplingKind::F3: {
      // one dot and two triangles: (T(. T)_c)_{1/2}  vs  ((T .)_{c'} T)_{1/2}
      std::vector<CT> c_basis, cp_basis;
      for (int two_c : {1, 3}) {
        c_basis.push_back(CT::couple(
            pair_tree(0, 1, 2),
            CT::couple(CT::leaf(2), pair_tree(3, 4, 2), two_c), 1));
        cp_basis.push_back(CT::couple(
            CT::couple(pair_tree(0, 1, 2), CT::leaf(2), two_c),
            pair_tree(3, 4, 2), 1));
      }
      return recoupling_matrix(cp_basis, c_basis, 5);
    }
  }
  throw std::invalid_argument("unknown recoupling kind");
}

}  // namespace xpulse
