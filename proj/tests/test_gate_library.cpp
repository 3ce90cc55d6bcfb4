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
#include <numbers>

#include "xpulse/encoded_analysis.hpp"
#include "xpulse/gate_library.hpp"

using namespace xpulse;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("duration solver fixed points") {
  const DurationPair d1 = solve_durations(2.0 * kPi / 3.0);
  CHECK(d1.t == doctest::Approx(0.426548).epsilon(1e-5));
  CHECK(d1.tbar == doctest::Approx(5.0 / 3.0 - d1.t));
  // phi = pi forces t + tbar = 2, giving tan(pi t / 2) = sqrt(2).
  const DurationPair dp = solve_durations(kPi);
  CHECK(dp.t == doctest::Approx(2.0 / kPi * std::atan(std::sqrt(2.0))));
  // the defining product, everywhere on a grid
  for (double phi = 0.1; phi < 2.0 * kPi; phi += 0.37) {
    const DurationPair d = solve_durations(phi);
    CHECK(std::tan(kPi * d.t / 2.0) * std::tan(kPi * d.tbar / 2.0) ==
          doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(kPi * (d.t + d.tbar - 1.0) == doctest::Approx(phi));
    CHECK(d.t <= d.tbar);
  }
  // endpoint limits are pinned, not solved
  CHECK(solve_durations(0.0).t == 0.0);
  CHECK(solve_durations(0.0).tbar == 1.0);
  CHECK(solve_durations(2.0 * kPi).t == 1.0);
  CHECK_THROWS_AS(solve_durations(-0.1), std::domain_error);
}

TEST_CASE("three-pulse phase gate contract") {
  for (double phi : {0.4, 1.0, 2.0, 4.4}) {
    CHECK(verify_contract({GateKind::kU3, phi}).pass);
    CHECK(verify_contract({GateKind::kU3Bar, phi}).pass);
  }
  // composed with its (s, sbar, s) inverse: exact identity
  const double phi = 1.3;
  PulseSequence both = u3_sequence(phi, false);
  const PulseSequence inv = u3_inverse_sequence(phi, false);
  both.pulses.insert(both.pulses.end(), inv.pulses.begin(), inv.pulses.end());
  CHECK((both.unitary() - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("four-spin phase gate contract and sector actions") {
  for (double phi : {0.8, 1.7, 3.9, 5.5}) {
    const ContractReport rep = verify_contract({GateKind::kU4, phi});
    CHECK(rep.pass);
  }
}

TEST_CASE("elevated t-pulse and SWAP") {
  for (double tt : {0.0, 0.3, 0.7, 1.0, 1.3}) {
    CHECK(verify_contract({GateKind::kT, tt}).pass);
  }
  CHECK(verify_contract({GateKind::kS, 0.0}).pass);
  // S^2 = identity on the full space
  PulseSequence twice = s_sequence();
  const PulseSequence once = s_sequence();
  twice.pulses.insert(twice.pulses.end(), once.pulses.begin(),
                      once.pulses.end());
  CHECK(phase_distance(twice.unitary(), Matrix::Identity(16, 16)) < 1e-12);
}

TEST_CASE("elevated t-pulse at t=1 gives the n1 reflection") {
  // The inner block alone realizes the n0 reflection at t = 1; the full
  // sequence conjugates it once more, landing on n1.sigma.
  const Matrix m = t_gate_closed_form(1.0);
  const Eigen::Vector3d f1(std::sqrt(3.0) / 2.0, 0.0, -0.5);
  const Eigen::Vector3d n1 = 2.0 * axis_n0().dot(f1) * f1 - axis_n0();
  CHECK((m - ndotsigma(n1)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((n1 - axis_n1()).norm() < 1e-14);

  // The constrained inner block at t = 1 gives n0.sigma on the qubit states.
  const Matrix u = apply_pulses(
      4, std::vector<ExchangePulse>{{0, 1, 0.5}, {1, 2, 1.5}, {0, 1, 1.0},
                                    {2, 3, 1.0}, {1, 2, 0.5}, {0, 1, 1.5}});
  using CT = CouplingTree;
  std::vector<Vector> basis;
  for (int two_b : {0, 2})
    basis.push_back(coupled_state(
        CT::couple(CT::leaf(0),
                   CT::couple(CT::leaf(1),
                              CT::couple(CT::leaf(2), CT::leaf(3), two_b), 1),
                   2),
        2, 4));
  Matrix block(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) block(r, c) = basis[r].dot(u * basis[c]);
  CHECK((block - ndotsigma(axis_n0())).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("skeleton collapses to a single pulse when the blocks are scalar") {
  // Three particles: with the elevated pieces replaced by their scalar
  // stand-ins, [SWAP(1,2), SWAP(0,1), pulse(1,2,t), SWAP(0,1), SWAP(1,2)]
  // equals pulse(0,1,t) exactly, phases included.
  for (double t : {0.0, 0.37, 1.0, 1.62}) {
    const std::vector<ExchangePulse> seq = {
        {1, 2, 1.0}, {0, 1, 1.0}, {1, 2, t}, {0, 1, 1.0}, {1, 2, 1.0}};
    const Matrix u = apply_pulses(3, seq);
    const Matrix want = exchange_unitary(3, {0, 1, t});
    CHECK((u - want).cwiseAbs().maxCoeff() < 1e-12);
  }
  // r-pulse version: r = 0 collapses to the identity the same way.
  const std::vector<ExchangePulse> r0 = {
      {1, 2, 0.0}, {0, 1, 1.0}, {1, 2, 0.0}, {0, 1, 1.0}, {1, 2, 0.0}};
  CHECK((apply_pulses(3, r0) - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <
        1e-13);
}

TEST_CASE("the constrained block maps the stretched state off the target") {
  // <((..)_1(..)_1)_1 | V0 | (.(...)_{3/2})_1> = 0: the two-pulse block sends
  // the stretched three-spin state into the mixed-pair sector.
  using CT = CouplingTree;
  const Matrix v0 = apply_pulses(
      4, std::vector<ExchangePulse>{{0, 1, 0.5}, {1, 2, 1.5}});
  const Vector stretched = coupled_state(
      CT::couple(CT::leaf(0),
                 CT::couple(CT::leaf(1),
                            CT::couple(CT::leaf(2), CT::leaf(3), 2), 3),
                 2),
      2, 4);
  const Vector v1 = coupled_state(
      CT::couple(CT::couple(CT::leaf(0), CT::leaf(1), 2),
                 CT::couple(CT::leaf(2), CT::leaf(3), 2), 2),
      2, 4);
  CHECK(std::abs(v1.dot(v0 * stretched)) < 1e-13);
}

TEST_CASE("cphase assemblies are scalar on the stretched pseudospin sector") {
  // In the f = 3/2 sector both assemblies multiply everything by the same
  // phase, independent of the similarity transformation.
  using CT = CouplingTree;
  for (double phi : {0.9, 2.6}) {
    for (const auto& seq : {u5_sequence(phi), u5bar_sequence(phi)}) {
      const Matrix u = seq.unitary();
      std::vector<Vector> f32;
      for (int two_c : {1, 3})
        f32.push_back(coupled_state(
            CT::couple(CT::couple(CT::leaf(1), CT::leaf(2), 2),
                       CT::couple(CT::leaf(3),
                                  CT::couple(CT::leaf(4), CT::leaf(5), 2),
                                  two_c),
                       3),
            3, 6));
      Matrix block(2, 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) block(r, c) = f32[r].dot(u * f32[c]);
      const Complex scalar = block(0, 0);
      CHECK(std::abs(std::abs(scalar) - 1.0) < 1e-11);
      CHECK((block - scalar * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
            1e-11);
    }
  }
}

TEST_CASE("five-spin cphase assembly and packages") {
  CHECK(verify_contract({GateKind::kU5, 2.5}).pass);
  CHECK(verify_contract({GateKind::kU5Bar, 2.5}).pass);
  CHECK(verify_contract({GateKind::kCphasePackage, 1.1}).pass);
  CHECK(verify_contract({GateKind::kCrotPackage, 0.7}).pass);
  CHECK(verify_contract({GateKind::kFwLhs, 0.0}).pass);
  CHECK(verify_contract({GateKind::kFwRhs, 0.0}).pass);
}

TEST_CASE("package structure: counts and correction placement") {
  const GateSequencePackage crot = controlled_rotation_package(0.9);
  CHECK(pulse_count(crot.core, CountMode::kAll) == 28);
  CHECK(crot.pre_corrections.pulses.size() == 2);
  CHECK(crot.post_corrections.pulses.size() == 3);
  CHECK_THROWS_AS(controlled_rotation_package(1.95), std::domain_error);

  const GateSequencePackage cph = cphase_package(0.8);
  CHECK(pulse_count(cph.core, CountMode::kAll) == 25);
  CHECK(pulse_count(cph.core, CountMode::kNonSwap) == 23);
  CHECK(cph.post_corrections.pulses.size() == 1);
  CHECK(cph.post_corrections.pulses[0].t ==
        doctest::Approx(solve_durations(0.8).tbar));
  CHECK_THROWS_AS(cphase_package(7.0), std::domain_error);
}

TEST_CASE("fw variants") {
  const PulseSequence lhs = fw_sequence(FwVariant::kLhs);
  const PulseSequence rhs = fw_sequence(FwVariant::kRhs);
  CHECK(lhs.pulses.size() == 20);
  CHECK(rhs.pulses.size() == 18);
  // locally equivalent: lhs equals rhs followed by the correction SWAP
  PulseSequence rhs_fixed = rhs;
  rhs_fixed.pulses.push_back(fw_rhs_correction_swap());
  CHECK((lhs.unitary() - rhs_fixed.unitary()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(phase_distance(lhs.unitary(), rhs_fixed.unitary()) < 1e-10);
}

TEST_CASE("five-spin assemblies leave the idle spin alone") {
  for (const auto& seq :
       {u5_sequence(1.0), fw_sequence(FwVariant::kLhs),
        controlled_rotation_package(0.5).combined()}) {
    for (const auto& p : seq.pulses) {
      CHECK(p.i >= 1);
      CHECK(p.j >= 1);
    }
  }
}
