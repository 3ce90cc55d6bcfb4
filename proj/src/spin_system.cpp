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
#include "xpulse/spin_system.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xpulse {

namespace {
constexpr double kPi = std::numbers::pi;

int bit_of(int state, int spin, int n) { return (state >> (n - 1 - spin)) & 1; }

void check_index(int n_spins, int i) {
  if (i < 0 || i >= n_spins) throw std::out_of_range("spin index out of range");
}
}  // namespace

double reduce_duration(double t) {
  t = std::fmod(t, 2.0);
  if (t < 0) t += 2.0;
  if (t < 1e-12 || t > 2.0 - 1e-12) t = 0.0;
  return t;
}

Matrix permutation_operator(int n_spins, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != n_spins)
    throw std::invalid_argument("permutation size must equal n_spins");
  std::vector<bool> hit(n_spins, false);
  for (int p : perm) {
    if (p < 0 || p >= n_spins || hit[p])
      throw std::invalid_argument("not a bijection on {0..n-1}");
    hit[p] = true;
  }
  const int dim = 1 << n_spins;
  Matrix m = Matrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    int t = 0;
    for (int i = 0; i < n_spins; ++i)
      t |= bit_of(s, i, n_spins) << (n_spins - 1 - perm[i]);
    m(t, s) = 1.0;
  }
  return m;
}

Matrix permutation_operator(int n_spins, const std::vector<int>& perm) {
  return permutation_operator(n_spins, std::span<const int>(perm));
}

Matrix transposition_operator(int n_spins, int i, int j) {
  check_index(n_spins, i);
  check_index(n_spins, j);
  std::vector<int> perm(n_spins);
  for (int k = 0; k < n_spins; ++k) perm[k] = k;
  std::swap(perm[i], perm[j]);
  return permutation_operator(n_spins, perm);
}

Matrix exchange_unitary(int n_spins, const ExchangePulse& pulse) {
  check_index(n_spins, pulse.i);
  check_index(n_spins, pulse.j);
  if (pulse.i == pulse.j) throw std::invalid_argument("pulse requires i != j");
  const double t = reduce_duration(pulse.t);
  const Complex e = std::exp(Complex(0.0, -kPi * t));
  const int dim = 1 << n_spins;
  Matrix m = transposition_operator(n_spins, pulse.i, pulse.j);
  m *= -(1.0 - e) / 2.0;
  m += ((1.0 + e) / 2.0) * Matrix::Identity(dim, dim);
  return m;
}

Matrix apply_pulses(int n_spins, std::span<const ExchangePulse> pulses) {
  const int dim = 1 << n_spins;
  Matrix u = Matrix::Identity(dim, dim);
  for (const ExchangePulse& p : pulses) u = exchange_unitary(n_spins, p) * u;
  if (unitarity_defect(u) > 1e-10)
    throw std::logic_error("accumulated pulse product lost unitarity");
  return u;
}

double phase_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch");
  const Complex tr = (u.adjoint() * v).trace();
  return 1.0 - std::abs(tr) / static_cast<double>(u.rows());
}

Matrix align_global_phase(const Matrix& target, const Matrix& m) {
  // The overlap trace gives the least-squares phase, but it can vanish for
  // traceless targets; fall back to aligning on the largest entry pair.
  const Complex tr = (m.adjoint() * target).trace();
  if (std::abs(tr) > 1e-6) return m * (tr / std::abs(tr));
  int br = 0, bc = 0;
  double best = -1.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const double w = std::abs(m(r, c)) * std::abs(target(r, c));
      if (w > best) {
        best = w;
        br = r;
        bc = c;
      }
    }
  if (best < 1e-300) return m;
  const Complex ratio = target(br, bc) / m(br, bc);
  return m * (ratio / std::abs(ratio));
}

double aligned_deviation(const Matrix& target, const Matrix& m) {
  return (align_global_phase(target, m) - target).cwiseAbs().maxCoeff();
}

Matrix total_sz(int n_spins) {
  const int dim = 1 << n_spins;
  Matrix m = Matrix::Zero(dim, dim);
  for (int s = 0; s < dim; ++s) {
    double sz = 0.0;
    for (int i = 0; i < n_spins; ++i) sz += 0.5 - bit_of(s, i, n_spins);
    m(s, s) = sz;
  }
  return m;
}

Matrix total_s2(int n_spins) {
  // S^2 = 3n/4 + sum_{i<j} (P_ij - 1/2), using S_i . S_j = P_ij/2 - 1/4.
  const int dim = 1 << n_spins;
  Matrix m = (3.0 * n_spins / 4.0) * Matrix::Identity(dim, dim);
  for (int i = 0; i < n_spins; ++i)
    for (int j = i + 1; j < n_spins; ++j) {
      m += transposition_operator(n_spins, i, j);
      m -= 0.5 * Matrix::Identity(dim, dim);
    }
  return m;
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace xpulse
