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

#include <numbers>
#include <random>

#include "xpulse/spin_system.hpp"

using namespace xpulse;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("zero-duration pulse is the identity") {
  const Matrix u = exchange_unitary(2, {0, 1, 0.0});
  CHECK(max_abs(u - Matrix::Identity(4, 4)) < 1e-15);
}

TEST_CASE("full pulse is a SWAP up to sign") {
  const Matrix u = exchange_unitary(2, {0, 1, 1.0});
  const Matrix p = transposition_operator(2, 0, 1);
  CHECK(max_abs(u + p) < 1e-14);
  // |ud> -> -|du>, |uu> -> -|uu>
  Vector ud = Vector::Zero(4), du = Vector::Zero(4), uu = Vector::Zero(4);
  ud(1) = 1;  // spin0 up (bit 0), spin1 down (bit 1)
  du(2) = 1;
  uu(0) = 1;
  CHECK(max_abs(Matrix(u * ud + du)) < 1e-14);
  CHECK(max_abs(Matrix(u * uu + uu)) < 1e-14);
}

TEST_CASE("half pulse: singlet eigenvalue 1, triplet -i") {
  const Matrix u = exchange_unitary(2, {0, 1, 0.5});
  Vector singlet(4), triplet(4);
  singlet << 0, 1, -1, 0;
  singlet /= std::sqrt(2.0);
  triplet << 0, 1, 1, 0;
  triplet /= std::sqrt(2.0);
  CHECK(std::abs(singlet.dot(u * singlet) - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(triplet.dot(u * triplet) - Complex(0, -1)) < 1e-14);
}

TEST_CASE("pulse index errors") {
  CHECK_THROWS_AS(exchange_unitary(2, {0, 2, 0.5}), std::out_of_range);
  CHECK_THROWS_AS(exchange_unitary(2, {1, 1, 0.5}), std::invalid_argument);
}

TEST_CASE("permutation operator composition and involution") {
  std::mt19937 rng(11);
  const int n = 4;
  std::vector<int> sigma{2, 0, 3, 1}, tau{1, 3, 0, 2};
  // perm_op(sigma o tau) = perm_op(sigma) perm_op(tau), composing position maps
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = sigma[tau[i]];
  CHECK(max_abs(permutation_operator(n, comp) -
                permutation_operator(n, sigma) * permutation_operator(n, tau)) <
        1e-14);
  const Matrix p = transposition_operator(2, 0, 1);
  CHECK(max_abs(p * p - Matrix::Identity(4, 4)) < 1e-15);
  CHECK_THROWS_AS(permutation_operator(2, std::vector<int>{0, 0}),
                  std::invalid_argument);
}

TEST_CASE("phase distance") {
  const Matrix u = exchange_unitary(3, {0, 1, 0.77});
  CHECK(phase_distance(u, u) < 1e-15);
  CHECK(phase_distance(u, std::polar(1.0, kPi / 7.0) * u) < 1e-14);
  // tr(P_01) = 2 on two spins, so the distance to the identity is 0.5.
  CHECK(phase_distance(Matrix::Identity(4, 4),
                       transposition_operator(2, 0, 1)) == doctest::Approx(0.5));
  CHECK_THROWS_AS(phase_distance(Matrix::Identity(2, 2), Matrix::Identity(4, 4)),
                  std::invalid_argument);
}

TEST_CASE("sequence algebra: merging, inverses, periodicity") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dur(0.0, 2.0);
  for (int c = 0; c < 20; ++c) {
    const double t1 = dur(rng), t2 = dur(rng);
    const Matrix a = exchange_unitary(2, {0, 1, t1});
    const Matrix b = exchange_unitary(2, {0, 1, t2});
    const Matrix m = exchange_unitary(2, {0, 1, reduce_duration(t1 + t2)});
    CHECK(max_abs(b * a - m) < 1e-13);
    const Matrix inv = exchange_unitary(2, {0, 1, reduce_duration(2.0 - t1)});
    CHECK(max_abs(inv * a - Matrix::Identity(4, 4)) < 1e-13);
    CHECK(max_abs(a - exchange_unitary(2, {0, 1, reduce_duration(t1 + 2.0)})) <
          1e-13);
  }
}

TEST_CASE("empty sequence gives identity; reverse-inverse cancels") {
  std::vector<ExchangePulse> empty;
  CHECK(max_abs(apply_pulses(3, empty) - Matrix::Identity(8, 8)) < 1e-15);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dur(0.0, 2.0);
  std::uniform_int_distribution<int> spin(0, 3);
  std::vector<ExchangePulse> seq;
  for (int k = 0; k < 8; ++k) {
    int i = spin(rng), j = spin(rng);
    if (i == j) j = (i + 1) % 4;
    seq.push_back({i, j, dur(rng)});
  }
  std::vector<ExchangePulse> undo;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    undo.push_back({it->i, it->j, reduce_duration(2.0 - it->t)});
  std::vector<ExchangePulse> both = seq;
  both.insert(both.end(), undo.begin(), undo.end());
  CHECK(max_abs(apply_pulses(4, both) - Matrix::Identity(16, 16)) < 1e-12);
}

TEST_CASE("every pulse commutes with the total spin") {
  for (int n : {2, 3, 5}) {
    const Matrix u = exchange_unitary(n, {0, n - 1, 0.63});
    const Matrix s2 = total_s2(n), sz = total_sz(n);
    CHECK(max_abs(u * s2 - s2 * u) < 1e-12);
    CHECK(max_abs(u * sz - sz * u) < 1e-12);
    CHECK(unitarity_defect(u) < 1e-10);
  }
}
