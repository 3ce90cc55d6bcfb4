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
#include "xpulse/encoded_analysis.hpp"

#include <json.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "xpulse/gate_library.hpp"

namespace xpulse {

namespace {
constexpr double kPi = std::numbers::pi;
using CT = CouplingTree;

CT pair_tree(int a, int b, int two_j) {
  return CT::couple(CT::leaf(a), CT::leaf(b), two_j);
}

Complex phase(double angle) { return std::polar(1.0, angle); }
}  // namespace

Eigen::Vector3d axis_n0() { return {0.0, std::sqrt(3.0) / 2.0, -0.5}; }
Eigen::Vector3d axis_n1() {
  return {std::sqrt(3.0) / 4.0, -std::sqrt(3.0) / 2.0, 0.25};
}
Eigen::Vector3d axis_n2() { return {2.0 * std::sqrt(2.0) / 3.0, 0.0, -1.0 / 3.0}; }
Eigen::Vector3d axis_n3() {
  return {-4.0 * std::sqrt(2.0) / 9.0, 0.0, -7.0 / 9.0};
}
Eigen::Vector3d axis_f0() { return {0.0, -std::sqrt(3.0) / 2.0, -0.5}; }

Matrix ndotsigma(const Eigen::Vector3d& n) {
  Matrix m(2, 2);
  m << n.z(), Complex(n.x(), -n.y()), Complex(n.x(), n.y()), -n.z();
  return m;
}

Matrix su2_rotation(const Eigen::Vector3d& n, double angle) {
  const Eigen::Vector3d u = n.normalized();
  return std::cos(angle / 2.0) * Matrix::Identity(2, 2) +
         Complex(0, 1) * std::sin(angle / 2.0) * ndotsigma(u);
}

EncodedBasis make_encoded_basis(int g, std::optional<int> two_m) {
  if (g != 0 && g != 1) throw std::invalid_argument("sector g must be 0 or 1");
  EncodedBasis basis;
  basis.g = g;
  basis.two_m = two_m.value_or(2 * g);
  int k = 0;
  for (int two_a : {0, 2})
    for (int two_b : {0, 2}) {
      const CT qubit_a = CT::couple(CT::leaf(0), pair_tree(1, 2, two_a), 1);
      const CT qubit_b = CT::couple(CT::leaf(3), pair_tree(4, 5, two_b), 1);
      basis.states[k++] = coupled_state(
          CT::couple(qubit_a, qubit_b, 2 * g), basis.two_m, 6);
    }
  return basis;
}

EncodedGateReport analyze_gate(const Matrix& u, int g,
                               std::optional<int> two_m) {
  const EncodedBasis basis = make_encoded_basis(g, two_m);
  EncodedGateReport report;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      report.gate(r, c) = basis.states[r].dot(u * basis.states[c]);
  // Out-of-subspace norm per column, computed on the residual vector so the
  // result stays at roundoff for leakage-free gates.
  for (int c = 0; c < 4; ++c) {
    Vector image = u * basis.states[c];
    for (int r = 0; r < 4; ++r) image -= report.gate(r, c) * basis.states[r];
    report.leakage = std::max(report.leakage, image.norm());
  }
  if (report.leakage < 1e-8) {
    report.invariants_valid = true;
    auto [g1, g2] = makhlin_invariants(report.gate);
    report.makhlin_g1 = g1;
    report.makhlin_g2 = g2;
    const Eigen::Matrix4cd& m = report.gate;
    double offdiag = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (r != c) offdiag = std::max(offdiag, std::abs(m(r, c)));
    if (offdiag < 1e-8) {
      report.phase_invariant = std::remainder(
          std::arg(m(0, 0)) - std::arg(m(1, 1)) - std::arg(m(2, 2)) +
              std::arg(m(3, 3)),
          2.0 * kPi);
      // diag(1, M) block structure: upper 2x2 proportional to identity with
      // equal phases.
      const bool upper_scalar = std::abs(m(0, 0) - m(1, 1)) < 1e-8;
      report.classification = upper_scalar ? "diag(1,M)" : "diagonal";
    } else {
      // Block-diagonal diag(1, M) with a non-diagonal lower block?
      double upper_off = std::max(std::abs(m(0, 1)), std::abs(m(1, 0)));
      double mixing = 0.0;
      for (int r : {0, 1})
        for (int c : {2, 3})
          mixing = std::max({mixing, std::abs(m(r, c)), std::abs(m(c, r))});
      if (upper_off < 1e-8 && mixing < 1e-8 &&
          std::abs(m(0, 0) - m(1, 1)) < 1e-8)
        report.classification = "diag(1,M)";
      else
        report.classification = "general";
    }
  } else {
    report.classification = "leaky";
  }
  return report;
}

EncodedGateReport extract_gate(const PulseSequence& seq, int g,
                               std::optional<int> two_m) {
  if (seq.n_spins != 6)
    throw std::invalid_argument("encoded extraction expects the 6-spin register");
  return analyze_gate(seq.unitary(), g, two_m);
}

std::string report_to_json(const EncodedGateReport& report) {
  nlohmann::json doc;
  doc["leakage"] = report.leakage;
  nlohmann::json gate = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c)
      row.push_back({report.gate(r, c).real(), report.gate(r, c).imag()});
    gate.push_back(row);
  }
  doc["gate"] = gate;
  if (report.invariants_valid) {
    doc["makhlin"] = {
        {"g1", {report.makhlin_g1.real(), report.makhlin_g1.imag()}},
        {"g2", report.makhlin_g2}};
  }
  if (report.phase_invariant)
    doc["phase_invariant"] = *report.phase_invariant;
  else
    doc["phase_invariant"] = nullptr;
  doc["classification"] = report.classification;
  return doc.dump(2);
}

std::pair<Complex, double> makhlin_invariants(const Eigen::Matrix4cd& u) {
  if ((u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() >
      1e-8)
    throw std::invalid_argument("local invariants require a unitary input");
  Eigen::Matrix4cd q;
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  q << 1, 0, 0, i,
       0, i, 1, 0,
       0, i, -1, 0,
       1, 0, 0, -i;
  q *= r;
  const Eigen::Matrix4cd ub = q.adjoint() * u * q;
  const Eigen::Matrix4cd m = ub.transpose() * ub;
  const Complex tr = m.trace();
  const Complex det = u.determinant();
  const Complex g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - (m * m).trace()) / (4.0 * det);
  return {g1, g2.real()};
}

RotationDecomposition rotation_angle(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("rotation decomposition expects 2x2");
  RotationDecomposition out;
  Eigen::ComplexEigenSolver<Matrix> solver(m);
  const Complex l0 = solver.eigenvalues()(0);
  const Complex l1 = solver.eigenvalues()(1);
  double ratio = std::arg(l0 / l1);
  out.ratio_phase = ratio < 0 ? ratio + 2.0 * kPi : ratio;
  out.xi = std::arg(l0 * l1) / 2.0;
  if (std::abs(l0 - l1) < 1e-12) {
    out.angle = 0.0;
    out.axis_defined = false;
    return out;
  }
  // Fold the angle into [0, pi], orienting the axis to match.
  int plus = 0;
  double folded = out.ratio_phase;
  if (folded > kPi) {
    folded = 2.0 * kPi - folded;
    plus = 1;
  }
  out.angle = folded;
  const Eigen::Vector2cd v = solver.eigenvectors().col(plus);
  // Bloch vector of the eigenstate with eigenphase +angle/2.
  const Complex a = v(0), b = v(1);
  out.axis = {2.0 * (std::conj(a) * b).real(), 2.0 * (std::conj(a) * b).imag(),
              std::norm(a) - std::norm(b)};
  // e^{i angle n.sigma/2} has eigenvalue e^{+i angle/2} on the +n eigenstate.
  out.axis_defined = true;
  return out;
}

double phi_of_t(double t) {
  const double x = (5.0 * std::cos(3.0 * kPi * t / 2.0) +
                    3.0 * std::cos(kPi * t / 2.0)) / 8.0;
  if (x > 1.0 + 1e-12 || x < -1.0 - 1e-12)
    throw std::domain_error("rotation-angle argument outside [-1, 1]");
  return 2.0 * std::acos(std::clamp(x, -1.0, 1.0));
}

Matrix t_gate_closed_form(double t) {
  const Eigen::Vector3d z(0, 0, 1);
  const Matrix full_z = std::cos(kPi * (2.0 - t)) * Matrix::Identity(2, 2) +
                        Complex(0, 1) * std::sin(kPi * (2.0 - t)) * ndotsigma(z);
  return phase(-kPi * t / 2.0) * full_z * su2_rotation(axis_n1(), -kPi * t);
}

Matrix pseudospin_oracle(PseudospinKind kind, double phi) {
  switch (kind) {
    case PseudospinKind::kU4F12:
      return phase(-phi / 2.0) * su2_rotation(axis_n2(), phi);
    case PseudospinKind::kU4F32:
      return phase(-phi) * Matrix::Identity(2, 2);
    case PseudospinKind::kU3Bar:
      return phase(-phi / 2.0) * su2_rotation({0, 0, 1}, phi);
    case PseudospinKind::kU3:
      return phase(-phi / 2.0) * su2_rotation(axis_n3(), phi);
  }
  throw std::logic_error("unknown pseudospin kind");
}

Matrix pseudospin_block(PseudospinKind kind, double phi, int two_f) {
  // Five-spin register 0..4: triplet pairs (0,1) and (3,4) around spin 2.
  PulseSequence seq;
  seq.n_spins = 5;
  switch (kind) {
    case PseudospinKind::kU4F12:
    case PseudospinKind::kU4F32: {
      PulseSequence u4 = u4_sequence(phi, 0, 5);
      seq.pulses = {{2, 3, 1.0}, {3, 4, 1.0}};
      seq.pulses.insert(seq.pulses.end(), u4.pulses.begin(), u4.pulses.end());
      seq.pulses.push_back({3, 4, 1.0});
      seq.pulses.push_back({2, 3, 1.0});
      break;
    }
    case PseudospinKind::kU3Bar:
      seq = u3_sequence(phi, true, 2, 5);
      break;
    case PseudospinKind::kU3:
      seq = u3_sequence(phi, false, 0, 5);
      break;
  }
  const Matrix u = seq.unitary();
  std::vector<Vector> basis;
  for (int two_c : {1, 3})
    basis.push_back(coupled_state(
        CT::couple(pair_tree(0, 1, 2),
                   CT::couple(CT::leaf(2), pair_tree(3, 4, 2), two_c),
                   two_f),
        two_f, 5));
  Matrix m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = basis[r].dot(u * basis[c]);
  return m;
}

std::array<double, 3> cone_angles() {
  const Eigen::Vector3d n2 = axis_n2(), n3 = axis_n3();
  const Eigen::Vector3d z(0, 0, 1), x(1, 0, 0);
  const double phi1 = std::acos(n2.dot(z) / (n2.dot(z) - 1.0));
  const double phi2 =
      std::acos(-(n3.dot(z) * (1.0 + n2.dot(z))) / (n2.dot(x) * n3.dot(x)));
  const double phi3 =
      std::acos(-(n2.dot(z) + n3.dot(z) * n3.dot(z)) / (n3.dot(x) * n3.dot(x)));
  return {phi1, phi2, phi3};
}

Matrix powt_factor() {
  // Two SWAPs carrying a spin-1/2 past a triplet pair, evaluated between the
  // coupled states on either side of the interchange.
  const Matrix u = apply_pulses(
      3, std::vector<ExchangePulse>{{0, 1, 1.0}, {1, 2, 1.0}});
  Matrix f = Matrix::Zero(2, 2);
  int k = 0;
  for (int two_c : {1, 3}) {
    const Vector src =
        coupled_state(CT::couple(CT::leaf(0), pair_tree(1, 2, 2), two_c),
                      two_c, 3);
    const Vector dst =
        coupled_state(CT::couple(pair_tree(0, 1, 2), CT::leaf(2), two_c),
                      two_c, 3);
    f(k, k) = dst.dot(u * src);
    ++k;
  }
  return f;
}

Matrix compute_f0() {
  // Simulate the constrained two-pulse block and take overlaps with the
  // designated target states.
  const Matrix v0 = apply_pulses(
      4, std::vector<ExchangePulse>{{0, 1, 0.5}, {1, 2, 1.5}});
  auto tb_state = [&](int two_b) {
    return coupled_state(
        CT::couple(CT::leaf(0),
                   CT::couple(CT::leaf(1), pair_tree(2, 3, two_b), 1), 2),
        2, 4);
  };
  const Vector v1 = coupled_state(
      CT::couple(pair_tree(0, 1, 2), pair_tree(2, 3, 2), 2), 2, 4);
  const Complex alpha = Complex(-2.0, -1.0) / std::sqrt(6.0);
  const Complex beta = Complex(0.0, 1.0) / std::sqrt(6.0);
  const Vector v2 =
      alpha * coupled_state(
                  CT::couple(pair_tree(0, 1, 2), pair_tree(2, 3, 0), 2), 2, 4) +
      beta * coupled_state(
                 CT::couple(pair_tree(0, 1, 0), pair_tree(2, 3, 2), 2), 2, 4);
  Matrix f(2, 2);
  f(0, 0) = v1.dot(v0 * tb_state(0));
  f(0, 1) = v1.dot(v0 * tb_state(2));
  f(1, 0) = v2.dot(v0 * tb_state(0));
  f(1, 1) = v2.dot(v0 * tb_state(2));
  // Hermitian gauge: tr(F^2) = 2 e^{2 i gamma} for F = e^{i gamma} (f.sigma);
  // fix the sign so the (0,0) entry is negative like f0_z.
  const Complex tr2 = (f * f).trace();
  f *= std::polar(1.0, -std::arg(tr2) / 2.0);
  if (f(0, 0).real() > 0) f = -f;
  return f;
}

}  // namespace xpulse
