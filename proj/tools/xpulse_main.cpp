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
#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "xpulse/encoded_analysis.hpp"
#include "xpulse/gate_library.hpp"
#include "xpulse/pulse_sequence.hpp"
#include "xpulse/reproduce.hpp"
#include "xpulse/rewrite_engine.hpp"

namespace {

using namespace xpulse;
constexpr double kPi = std::numbers::pi;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit_error(const std::string& what) {
  nlohmann::json err;
  err["error"] = what;
  std::cerr << err.dump() << "\n";
}

GateSequencePackage synthesize(const std::string& gate, double phi, double t,
                               const std::string& variant) {
  if (gate == "cphase") return cphase_package(phi);
  if (gate == "crot") return controlled_rotation_package(t);
  if (gate == "fw") {
    GateSequencePackage pkg;
    pkg.core = fw_sequence(variant == "rhs" ? FwVariant::kRhs : FwVariant::kLhs);
    pkg.pre_corrections.n_spins = pkg.post_corrections.n_spins = 6;
    if (variant == "rhs")
      pkg.post_corrections.pulses.push_back(fw_rhs_correction_swap());
    return pkg;
  }
  if (gate == "u3" || gate == "u3bar") {
    GateSequencePackage pkg;
    pkg.core = u3_sequence(phi, gate == "u3bar");
    pkg.pre_corrections.n_spins = pkg.post_corrections.n_spins =
        pkg.core.n_spins;
    return pkg;
  }
  if (gate == "u4") {
    GateSequencePackage pkg;
    pkg.core = u4_sequence(phi);
    pkg.pre_corrections.n_spins = pkg.post_corrections.n_spins = 4;
    return pkg;
  }
  if (gate == "u5" || gate == "u5bar") {
    GateSequencePackage pkg;
    pkg.core = gate == "u5" ? u5_sequence(phi) : u5bar_sequence(phi);
    pkg.pre_corrections.n_spins = pkg.post_corrections.n_spins = 6;
    return pkg;
  }
  if (gate == "t" || gate == "s") {
    GateSequencePackage pkg;
    pkg.core = gate == "t" ? t_sequence(t) : s_sequence();
    pkg.pre_corrections.n_spins = pkg.post_corrections.n_spins = 4;
    return pkg;
  }
  throw std::invalid_argument("unknown gate: " + gate);
}

int cmd_simulate(const std::string& in_path, int sector,
                 const std::string& out_path) {
  const GateSequencePackage pkg = parse_package(read_file(in_path));
  const PulseSequence seq = pkg.combined();
  std::cout << std::setprecision(10);
  std::cout << "n_spins: " << seq.n_spins << "\n";
  std::cout << "pulses:  " << pulse_count(seq, CountMode::kAll)
            << " (non-swap " << pulse_count(seq, CountMode::kNonSwap) << ")\n";
  const Matrix u = seq.unitary();
  std::cout << "unitarity defect: " << unitarity_defect(u) << "\n";
  if (seq.n_spins == 6) {
    const EncodedGateReport rep = analyze_gate(u, sector);
    std::cout << "leakage (g=" << sector << "): " << rep.leakage << "\n";
    std::cout << "classification: " << rep.classification << "\n";
    if (!out_path.empty()) write_file(out_path, report_to_json(rep));
  }
  return 0;
}

int cmd_verify(const std::string& gate, double phi, double t,
               const std::string& in_path, int sector) {
  if (!in_path.empty()) {
    const GateSequencePackage pkg = parse_package(read_file(in_path));
    const EncodedGateReport rep = extract_gate(pkg.combined(), sector);
    std::cout << report_to_json(rep) << "\n";
    const bool ok = rep.leakage < 1e-9;
    std::cout << (ok ? "PASS" : "FAIL") << "  leakage "
              << std::setprecision(10) << rep.leakage << "\n";
    return ok ? 0 : 1;
  }
  NamedGateSpec spec;
  spec.kind = gate_kind_from_name(gate);
  spec.parameter = (spec.kind == GateKind::kT || spec.kind == GateKind::kCrotPackage)
                       ? t
                       : phi;
  const ContractReport rep = verify_contract(spec);
  std::cout << rep.detail << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_synthesize(const std::string& gate, double phi, double t,
                   const std::string& variant, const std::string& out_path) {
  const GateSequencePackage pkg = synthesize(gate, phi, t, variant);
  const std::string text = serialize(pkg);
  if (out_path.empty())
    std::cout << text << "\n";
  else
    write_file(out_path, text);
  return 0;
}

int cmd_rewrite(const std::string& in_path, const std::string& layout,
                const std::string& out_path, const std::string& trace_path) {
  const PulseSequence seq = parse_sequence(read_file(in_path));
  const NormalizeResult res = normalize(
      seq, layout == "complete" ? Layout::kComplete : Layout::kLinear);
  std::cout << "pulses: " << pulse_count(seq, CountMode::kAll) << " -> "
            << pulse_count(res.reduced, CountMode::kAll) << "\n";
  if (!res.residual_swaps.empty()) {
    std::cout << "residual permutation:";
    for (int p : res.residual_perm) std::cout << " " << p;
    std::cout << (res.residual_absorbable ? "  (absorbable)" : "") << "\n";
  }
  if (!out_path.empty()) write_file(out_path, serialize(res.reduced));
  if (!trace_path.empty()) {
    nlohmann::json doc;
    doc["reduced"] = nlohmann::json::parse(serialize(res.reduced));
    doc["residual_perm"] = res.residual_perm;
    doc["phase"] = {res.phase.real(), res.phase.imag()};
    nlohmann::json sw = nlohmann::json::array();
    for (const auto& s : res.residual_swaps)
      sw.push_back({{"i", s.i}, {"j", s.j}, {"t", s.t}});
    doc["residual_swaps"] = sw;
    write_file(trace_path, doc.dump(2));
  }
  return 0;
}

int cmd_sweep(const std::string& gate, int points, const std::string& out_path) {
  std::ostringstream os;
  os << std::setprecision(10);
  if (gate == "crot") {
    os << "t,phi_of_t,leakage,makhlin_g1_re,makhlin_g1_im,makhlin_g2\n";
    const double tmax = controlled_rotation_t_max();
    for (int k = 0; k < points; ++k) {
      const double t = tmax * k / (points - 1);
      const EncodedGateReport rep =
          extract_gate(controlled_rotation_package(t).combined(), 1);
      os << t << "," << phi_of_t(t) << "," << rep.leakage << ","
         << rep.makhlin_g1.real() << "," << rep.makhlin_g1.imag() << ","
         << rep.makhlin_g2 << "\n";
    }
  } else if (gate == "cphase") {
    os << "phi,invariant,leakage,makhlin_g1_re,makhlin_g1_im,makhlin_g2\n";
    for (int k = 0; k < points; ++k) {
      const double phi = 2.0 * kPi * (k + 1) / (points + 1);
      const EncodedGateReport rep =
          extract_gate(cphase_package(phi).combined(), 1);
      os << phi << "," << (rep.phase_invariant ? *rep.phase_invariant : 0.0)
         << "," << rep.leakage << "," << rep.makhlin_g1.real() << ","
         << rep.makhlin_g1.imag() << "," << rep.makhlin_g2 << "\n";
    }
  } else {
    throw std::invalid_argument("sweep supports crot and cphase");
  }
  if (out_path.empty())
    std::cout << os.str();
  else
    write_file(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exchange-pulse sequence compiler, simulator and verifier"};
  app.require_subcommand(1);

  std::string in_path, out_path, trace_path, gate = "cphase",
              variant = "lhs", layout = "complete";
  double phi = kPi, t = 1.0;
  int sector = 1, points = 51;

  auto* simulate = app.add_subcommand("simulate", "simulate a sequence file");
  simulate->add_option("--in", in_path, "sequence JSON")->required();
  simulate->add_option("--sector", sector, "encoded sector g (0 or 1)");
  simulate->add_option("--report", out_path, "write the gate report JSON");

  auto* verify = app.add_subcommand("verify", "check a gate contract");
  verify->add_option("--gate", gate, "u3|u3bar|u4|t|s|u5|u5bar|fw-lhs|fw-rhs|crot|cphase");
  verify->add_option("--phi", phi, "angle parameter");
  verify->add_option("--t", t, "duration parameter");
  verify->add_option("--in", in_path, "verify a sequence file instead");
  verify->add_option("--sector", sector, "encoded sector g (0 or 1)");

  auto* synth = app.add_subcommand("synthesize", "emit a sequence file");
  synth->add_option("--gate", gate, "cphase|crot|fw|u3|u3bar|u4|u5|u5bar|t|s")
      ->required();
  synth->add_option("--phi", phi, "angle parameter");
  synth->add_option("--t", t, "duration parameter");
  synth->add_option("--variant", variant, "fw variant: lhs|rhs");
  synth->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* rewrite = app.add_subcommand("rewrite", "normalize a sequence");
  rewrite->add_option("--in", in_path, "sequence JSON")->required();
  rewrite->add_option("--layout", layout, "complete|linear");
  rewrite->add_option("--out", out_path, "write the reduced sequence");
  rewrite->add_option("--trace", trace_path, "write the residual bookkeeping");

  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep->add_option("--gate", gate, "crot|cphase");
  sweep->add_option("--points", points, "grid size (default 51)");
  sweep->add_option("--out", out_path, "output CSV path");

  auto* reproduce = app.add_subcommand("reproduce", "run the verification table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(in_path, sector, out_path);
    if (verify->parsed()) return cmd_verify(gate, phi, t, in_path, sector);
    if (synth->parsed()) return cmd_synthesize(gate, phi, t, variant, out_path);
    if (rewrite->parsed()) return cmd_rewrite(in_path, layout, out_path, trace_path);
    if (sweep->parsed()) return cmd_sweep(gate, points, out_path);
    if (reproduce->parsed()) return xpulse::run_acceptance(std::cout) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    emit_error(e.what());
    return 2;
  } catch (const std::domain_error& e) {
    emit_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(e.what());
    return 1;
  }
  return 0;
}
