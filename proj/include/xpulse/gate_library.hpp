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
#ifndef XPULSE_GATE_LIBRARY_HPP_
#define XPULSE_GATE_LIBRARY_HPP_

// Synthesis of the named gate sequences on three-spin encoded qubits: the
// duration solver, the three-pulse phase gates and their four- and five-spin
// assemblies, the elevated-SWAP constructions, the Fong-Wandzura pair, and
// the packaged two-qubit gates with their single-qubit correction pulses.
//
// Register convention: six spins 0..5; qubit A is (0,(1,2)) and qubit B is
// (3,(4,5)); all two-qubit sequences act on the five rightmost spins 1..5.

#include <string>

#include "xpulse/pulse_sequence.hpp"

namespace xpulse {

// Durations t <= tbar solving tan(pi t/2) tan(pi tbar/2) = -2 with
// phi = pi (t + tbar - 1); s = 2 - t and sbar = 2 - tbar realize 2 pi - phi.
// Endpoints: phi = 0 -> (0, 1) and phi = 2 pi -> (1, 2) are the continuum
// limits; the product equation degenerates there.
struct DurationPair {
  double t = 0.0;
  double tbar = 1.0;
  double s() const { return 2.0 - t; }
  double sbar() const { return 2.0 - tbar; }
};

DurationPair solve_durations(double phi);

// Geometry constants of the five-spin assembly: arccos(1/4), arccos(-7/8),
// arccos(-11/16).
double cone_angle_1();
double cone_angle_2();
double cone_angle_3();

// Three-pulse phase gate on spins (base, base+1, base+2): durations t, tbar, t
// with the outer pulses on the pair crossing the conserved one. The plain
// form conserves the total spin of the top pair (base, base+1); the mirrored
// form conserves the bottom pair (base+1, base+2).
PulseSequence u3_sequence(double phi, bool mirrored, int base = 0,
                          int n_spins = 3);

// Inverse realization (s, sbar, s), the exact pulse-by-pulse inverse.
PulseSequence u3_inverse_sequence(double phi, bool mirrored, int base = 0,
                                  int n_spins = 3);

// Eleven-pulse gate on spins base..base+3 conserving both pair spins:
// identity on the b = 0 sector, phase e^{-i phi} on the d = 1, 2 sectors with
// a = b = 1, and e^{-i pi tbar(phi)} on a = 0. Built as a similarity
// transform of the phase gate by a fixed scaffold (the phi = 2 pi / 3 block
// and a duration-2/3 pulse).
PulseSequence u4_sequence(double phi, int base = 0, int n_spins = 4);

// Elevated t-pulse on spins base..base+3: block-diagonal with identity on
// d = 0 and the closed-form 2x2 unitary on the d = 1 qubit sector. Eleven
// pulses.
PulseSequence t_sequence(double t, int base = 0, int n_spins = 4);

// Elevated SWAP on spins base..base+3: +1 on d = 0, -1 on the d = 1 qubit
// sector. Ten pulses.
PulseSequence s_sequence(int base = 0, int n_spins = 4);

// The two five-spin CPHASE assemblies (acting on spins 1..5 of a 6-spin
// register): the streamlined form and the older three-block form kept for
// regression comparison.
PulseSequence u5_sequence(double phi);
PulseSequence u5bar_sequence(double phi);

// Packaged gates with the single-qubit corrections split out.
// Controlled rotation: 28-pulse nearest-neighbor core; valid for
// t in [0, 4 arctan(sqrt(2 - sqrt(3)))].
GateSequencePackage controlled_rotation_package(double t);
double controlled_rotation_t_max();

// CPHASE(phi): 25-pulse nearest-neighbor core (two SWAPs), with the
// duration-tbar correction pulse on the control pair.
GateSequencePackage cphase_package(double phi);

enum class FwVariant { kLhs, kRhs };

// The two Fong-Wandzura representations: the block-assembled 20-pulse form
// and the compact 18-pulse form. They agree up to one intra-qubit SWAP
// applied after the 18-pulse form (see fw_equivalence_trace()).
PulseSequence fw_sequence(FwVariant variant);
ExchangePulse fw_rhs_correction_swap();

// Matrix-contract checks: simulate a sequence, project onto the coupled
// basis the contract is stated in, and report the largest deviation after
// aligning the global phase.
enum class GateKind {
  kU3,
  kU3Bar,
  kU4,
  kT,
  kS,
  kU5,
  kU5Bar,
  kFwLhs,
  kFwRhs,
  kCrotPackage,
  kCphasePackage,
};

struct NamedGateSpec {
  GateKind kind;
  double parameter = 0.0;  // phi or t where applicable
};

struct ContractReport {
  bool pass = false;
  double max_deviation = 0.0;
  std::string detail;
};

ContractReport verify_contract(const NamedGateSpec& spec);

GateKind gate_kind_from_name(const std::string& name);

}  // namespace xpulse

#endif  // XPULSE_GATE_LIBRARY_HPP_
