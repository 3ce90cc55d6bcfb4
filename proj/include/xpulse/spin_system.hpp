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
#ifndef XPULSE_SPIN_SYSTEM_HPP_
#define XPULSE_SPIN_SYSTEM_HPP_

// Exact linear algebra for registers of n spin-1/2 particles in the full 2^n
// product space. Basis convention: spin 0 is the most significant bit; bit
// value 0 means spin up.

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace xpulse {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// One Heisenberg exchange pulse between spins i and j. The dimensionless
// duration lives on [0, 2); t = 1 is a SWAP up to phase, and the inverse of a
// t-pulse is a (2 - t)-pulse.
struct ExchangePulse {
  int i = 0;
  int j = 0;
  double t = 0.0;
};

// Reduce a duration to [0, 2), snapping values within 1e-12 of the lattice
// {0, 2} to zero.
double reduce_duration(double t);

inline bool is_swap_pulse(const ExchangePulse& p) {
  return std::abs(p.t - 1.0) < 1e-12;
}
inline bool is_zero_pulse(const ExchangePulse& p) {
  return p.t < 1e-12 || p.t > 2.0 - 1e-12;
}

// Permutation operator on the product space: the spin content at position i
// moves to position perm[i]. No phase.
Matrix permutation_operator(int n_spins, std::span<const int> perm);
Matrix permutation_operator(int n_spins, const std::vector<int>& perm);

// Two-spin transposition operator P_ij.
Matrix transposition_operator(int n_spins, int i, int j);

// Exchange-pulse unitary in closed form,
//   U = ((1 + e^{-i pi t})/2) 1 - ((1 - e^{-i pi t})/2) P_ij,
// i.e. eigenvalue 1 on the singlet of (i, j) and e^{-i pi t} on the triplet.
Matrix exchange_unitary(int n_spins, const ExchangePulse& pulse);

// Product of pulse unitaries in time order (first pulse acts first).
Matrix apply_pulses(int n_spins, std::span<const ExchangePulse> pulses);

// Global-phase-insensitive distance 1 - |tr(U^dag V)| / dim. Zero iff the two
// operators agree up to a global phase.
double phase_distance(const Matrix& u, const Matrix& v);

// Phase e^{i theta} maximizing the overlap of e^{i theta} m with target;
// returns m rotated by that phase.
Matrix align_global_phase(const Matrix& target, const Matrix& m);

// Largest |entry| of a - b after aligning the global phase of b to a.
double aligned_deviation(const Matrix& target, const Matrix& m);

// Total-spin operators for conservation checks.
Matrix total_sz(int n_spins);
Matrix total_s2(int n_spins);

// || U^dag U - 1 ||_max
double unitarity_defect(const Matrix& u);

}  // namespace xpulse

#endif  // XPULSE_SPIN_SYSTEM_HPP_
