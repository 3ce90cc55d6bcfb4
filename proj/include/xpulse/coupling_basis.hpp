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
#ifndef XPULSE_COUPLING_BASIS_HPP_
#define XPULSE_COUPLING_BASIS_HPP_

// Total-spin coupled basis states built by sequential Clebsch-Gordan coupling
// in the Condon-Shortley convention, plus the recoupling matrices relating
// different coupling orders. Angular momenta are carried as twice their value
// (two_j, two_m) so that half-integers stay exact.

#include <memory>
#include <string>
#include <vector>

#include "xpulse/spin_system.hpp"

namespace xpulse {

// Binary coupling tree. Leaves are physical spin-1/2 sites; every internal
// node carries the total spin of its subtree. Effective higher-spin particles
// are represented by their constituent spin-1/2 leaves (a spin-1 "triangle"
// is a pair coupled to two_j = 2).
class CouplingTree {
 public:
  static CouplingTree leaf(int spin_index);
  static CouplingTree couple(CouplingTree left, CouplingTree right, int two_j);

  int two_j() const { return two_j_; }
  bool is_leaf() const { return !left_; }
  int spin_index() const { return spin_index_; }
  const CouplingTree& left() const { return *left_; }
  const CouplingTree& right() const { return *right_; }

  // Leaf indices in left-to-right order; throws if an index repeats or a
  // label violates the triangle rule.
  std::vector<int> leaves() const;
  void validate() const;

 private:
  CouplingTree() = default;
  int two_j_ = 1;
  int spin_index_ = -1;
  std::shared_ptr<const CouplingTree> left_, right_;
};

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | J M> with the highest-weight
// coefficient positive. Arguments violating the triangle or magnetization
// rules give 0.
double cg_coefficient(int two_j1, int two_m1, int two_j2, int two_m2,
                      int two_cap_j, int two_cap_m);

// Convenience overload on physical (possibly half-integer) quantum numbers.
double cg_coefficient(double j1, double m1, double j2, double m2, double cap_j,
                      double cap_m);

// Normalized product-space vector for the tree at magnetization two_m on an
// n-spin register; spins absent from the tree are filled with spin-up.
Vector coupled_state(const CouplingTree& tree, int two_m, int n_spins);

// Overlap matrix <target_k | source_l>, evaluated at a common magnetization
// (the highest weight of the smaller total spin). Both lists must span the
// same subspace; spans are compared through their Gram projectors.
Matrix recoupling_matrix(const std::vector<CouplingTree>& source,
                         const std::vector<CouplingTree>& target, int n_spins);

enum class RecouplingKind { F1, F2, F3 };

// Closed-form recoupling matrices f . sigma with
//   f1 = (sqrt(3)/2, 0, -1/2)
//   f2 = (sqrt(2/3), 0, -1/sqrt(3))
//   f3 = (2 sqrt(2)/3, 0, -1/3).
Matrix analytic_f(RecouplingKind kind);

// The same matrices computed numerically from coupled states.
Matrix numeric_f(RecouplingKind kind);

}  // namespace xpulse

#endif  // XPULSE_COUPLING_BASIS_HPP_
