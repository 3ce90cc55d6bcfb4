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
#ifndef XPULSE_ENCODED_ANALYSIS_HPP_
#define XPULSE_ENCODED_ANALYSIS_HPP_

// Encoded-qubit gate extraction and diagnostics: leakage, Makhlin local
// invariants, rotation-angle decomposition, and the closed-form pseudospin
// and recoupling checks for the five-spin assemblies.

#include <array>
#include <optional>
#include <string>

#include "xpulse/coupling_basis.hpp"
#include "xpulse/pulse_sequence.hpp"

namespace xpulse {

// Rotation axes of the five-spin assembly (unit vectors).
Eigen::Vector3d axis_n0();  // (0, sqrt(3)/2, -1/2)
Eigen::Vector3d axis_n1();  // (sqrt(3)/4, -sqrt(3)/2, 1/4)
Eigen::Vector3d axis_n2();  // (2 sqrt(2)/3, 0, -1/3)
Eigen::Vector3d axis_n3();  // (-4 sqrt(2)/9, 0, -7/9)
Eigen::Vector3d axis_f0();  // (0, -sqrt(3)/2, -1/2)

Matrix ndotsigma(const Eigen::Vector3d& n);
// e^{i angle n.sigma / 2}
Matrix su2_rotation(const Eigen::Vector3d& n, double angle);

// The four states |ab> of two three-spin qubits at total spin g in {0, 1},
// built at the highest weight (two_m = 2 g unless overridden).
struct EncodedBasis {
  int g = 1;
  int two_m = 2;
  std::array<Vector, 4> states;  // |00>, |01>, |10>, |11>
};
EncodedBasis make_encoded_basis(int g, std::optional<int> two_m = std::nullopt);

struct EncodedGateReport {
  Eigen::Matrix4cd gate;
  double leakage = 0.0;
  Complex makhlin_g1;
  double makhlin_g2 = 0.0;
  std::optional<double> phase_invariant;  // a00 - a01 - a10 + a11, diagonal gates
  std::string classification;             // "diag(1,M)" | "diagonal" | "general"
  bool invariants_valid = false;
};

EncodedGateReport extract_gate(const PulseSequence& seq, int g,
                               std::optional<int> two_m = std::nullopt);
EncodedGateReport analyze_gate(const Matrix& u, int g,
                               std::optional<int> two_m = std::nullopt);

std::string report_to_json(const EncodedGateReport& report);

// Magic-basis local invariants (G1, G2); identity -> (1, 3), CNOT -> (0, 1).
std::pair<Complex, double> makhlin_invariants(const Eigen::Matrix4cd& u);

// Decomposition m = e^{i xi} e^{i angle n.sigma / 2}. The reported angle is
// folded to [0, pi] with the axis oriented to match; ratio_phase keeps the
// unfolded eigenvalue-ratio phase in [0, 2 pi) for invariant matching.
struct RotationDecomposition {
  double angle = 0.0;
  double ratio_phase = 0.0;
  double xi = 0.0;
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  bool axis_defined = false;
};
RotationDecomposition rotation_angle(const Matrix& m);

// Rotation angle of the elevated t-pulse block:
//   phi(t) = 2 arccos((5 cos(3 pi t / 2) + 3 cos(pi t / 2)) / 8).
double phi_of_t(double t);

// Closed form of the elevated t-pulse block,
//   M = e^{-i pi t/2} e^{i pi (2-t) z.sigma} e^{-i pi t n1.sigma/2}.
Matrix t_gate_closed_form(double t);

// Closed-form pseudospin blocks of the five-spin assemblies in the
// (c = 1/2, 3/2) basis of a fixed total-spin-f sector.
enum class PseudospinKind { kU4F12, kU4F32, kU3Bar, kU3 };
Matrix pseudospin_oracle(PseudospinKind kind, double phi);

// Simulated pseudospin block: the named operation on the five active spins,
// projected onto the f-sector basis (f2 = 1 or 3).
Matrix pseudospin_block(PseudospinKind kind, double phi, int two_f);

// (arccos(1/4), arccos(-7/8), arccos(-11/16)) from the axis geometry.
std::array<double, 3> cone_angles();

// diag(-1, 1) on c = (1/2, 3/2): the phase picked up when a spin-1/2 is
// permuted past a triplet pair, computed by simulating the two-SWAP sequence.
Matrix powt_factor();

// Overlap matrix of the simulated two-pulse basis-change sequence against the
// designated target states, reduced to its Hermitian gauge; equals
// f0 . sigma.
Matrix compute_f0();

}  // namespace xpulse

#endif  // XPULSE_ENCODED_ANALYSIS_HPP_
