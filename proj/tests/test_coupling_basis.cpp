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
#include <doctest.h>

#include <cmath>

#include "xpulse/coupling_basis.hpp"

using namespace xpulse;

namespace {
using CT = CouplingTree;

CT pair_tree(int a, int b, int two_j) {
  return CT::couple(CT::leaf(a), CT::leaf(b), two_j);
}
}  // namespace

TEST_CASE("highest-weight coefficient is 1") {
  CHECK(cg_coefficient(0.5, 0.5, 1.0, 1.0, 1.5, 1.5) == doctest::Approx(1.0));
  CHECK(cg_coefficient(1.0, 1.0, 1.0, 1.0, 2.0, 2.0) == doctest::Approx(1.0));
}

TEST_CASE("spin-half couplings carry the Condon-Shortley signs") {
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(cg_coefficient(0.5, 0.5, 0.5, -0.5, 1.0, 0.0) == doctest::Approx(r));
  CHECK(cg_coefficient(0.5, -0.5, 0.5, 0.5, 1.0, 0.0) == doctest::Approx(r));
  CHECK(cg_coefficient(0.5, 0.5, 0.5, -0.5, 0.0, 0.0) == doctest::Approx(r));
  CHECK(cg_coefficient(0.5, -0.5, 0.5, 0.5, 0.0, 0.0) == doctest::Approx(-r));
}

TEST_CASE("triangle violations and bad magnetizations give zero") {
  CHECK(cg_coefficient(0.5, 0.5, 0.5, 0.5, 2.0, 1.0) == 0.0);
  CHECK(cg_coefficient(0.5, 0.5, 0.5, 0.5, 1.0, 0.0) == 0.0);
  CHECK(cg_coefficient(1, 3, 1, -1, 2, 2) == 0.0);  // |m| > j (twice-ints)
}

TEST_CASE("CG orthogonality") {
  // sum over m1, m2 of C(...J M) C(...J' M') = delta
  for (int two_j : {0, 2}) {
    for (int two_jp : {0, 2}) {
      double acc = 0.0;
      for (int two_m1 : {-1, 1})
        for (int two_m2 : {-1, 1})
          acc += cg_coefficient(1, two_m1, 1, two_m2, two_j, 0) *
                 cg_coefficient(1, two_m1, 1, two_m2, two_jp, 0);
      CHECK(acc == doctest::Approx(two_j == two_jp ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("singlet state and qubit-zero state") {
  const Vector s = coupled_state(pair_tree(0, 1, 0), 0, 2);
  Vector want(4);
  want << 0, 1, -1, 0;
  want /= std::sqrt(2.0);
  CHECK((s - want).norm() < 1e-14);

  // (.(..)_0)_{1/2} at Sz = +1/2 is |up> (x) singlet.
  const Vector q0 =
      coupled_state(CT::couple(CT::leaf(0), pair_tree(1, 2, 0), 1), 1, 3);
  Vector want3 = Vector::Zero(8);
  want3(1) = 1.0 / std::sqrt(2.0);   // u u d
  want3(2) = -1.0 / std::sqrt(2.0);  // u d u
  CHECK((q0 - want3).norm() < 1e-14);
}

TEST_CASE("coupled states are total-spin eigenstates and orthonormal") {
  const CT tree = CT::couple(CT::leaf(0), pair_tree(1, 2, 2), 1);
  const Vector v = coupled_state(tree, 1, 3);
  CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  const Matrix s2 = total_s2(3), sz = total_sz(3);
  CHECK((s2 * v - 0.75 * v).norm() < 1e-12);   // j = 1/2
  CHECK((sz * v - 0.5 * v).norm() < 1e-12);
  // distinct internal labels at a shared node are orthogonal
  const Vector w =
      coupled_state(CT::couple(CT::leaf(0), pair_tree(1, 2, 0), 1), 1, 3);
  CHECK(std::abs(v.dot(w)) < 1e-13);
}

TEST_CASE("tree validation") {
  CHECK_THROWS_AS(coupled_state(CT::couple(CT::leaf(0), CT::leaf(0), 2), 2, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(coupled_state(pair_tree(0, 1, 3), 3, 2),
                  std::invalid_argument);  // triangle violation
  CHECK_THROWS_AS(coupled_state(pair_tree(0, 5, 0), 0, 3), std::out_of_range);
}

TEST_CASE("recoupling matrices match the closed forms") {
  for (auto kind : {RecouplingKind::F1, RecouplingKind::F2, RecouplingKind::F3}) {
    const Matrix num = numeric_f(kind);
    const Matrix ana = analytic_f(kind);
    CHECK((num - ana).cwiseAbs().maxCoeff() < 1e-12);
    // real, symmetric, involutory
    CHECK(num.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((num - num.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((num * num - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("identical bases give the identity") {
  std::vector<CT> basis;
  for (int two_a : {0, 2})
    basis.push_back(CT::couple(CT::leaf(0), pair_tree(1, 2, two_a), 1));
  const Matrix m = recoupling_matrix(basis, basis, 3);
  CHECK((m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("span mismatch is rejected") {
  std::vector<CT> a = {CT::couple(CT::leaf(0), pair_tree(1, 2, 0), 1)};
  std::vector<CT> b = {CT::couple(CT::leaf(0), pair_tree(1, 2, 2), 1)};
  CHECK_THROWS_AS(recoupling_matrix(a, b, 3), std::invalid_argument);
}
