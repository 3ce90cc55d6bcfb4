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
#include "xpulse/rewrite_engine.hpp"

#include <json.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xpulse {

namespace {

using Pulses = std::vector<ExchangePulse>;

bool same_pair(const ExchangePulse& a, const ExchangePulse& b) {
  return (a.i == b.i && a.j == b.j) || (a.i == b.j && a.j == b.i);
}

ExchangePulse relabeled(const ExchangePulse& p, int i, int j) {
  auto map = [&](int x) { return x == i ? j : (x == j ? i : x); };
  ExchangePulse out{map(p.i), map(p.j), p.t};
  if (out.i > out.j) std::swap(out.i, out.j);
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("rewrite step not applicable: " + msg);
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

PulseSequence apply_step(const PulseSequence& seq, const RewriteStep& step) {
  PulseSequence out = seq;
  out.rewrite_output = true;
  Pulses& p = out.pulses;
  const int n = static_cast<int>(p.size());
  const int k = step.position;

  switch (step.rule) {
    case RewriteRule::kSwapCommute: {
      require(k >= 0 && k < n, "position out of range");
      require(is_swap_pulse(p[k]), "pulse at position is not a SWAP");
      const int m = k + step.direction;
      require(m >= 0 && m < n, "no neighbor in that direction");
      // (-P_ij) U_kl(t) (-P_ij)^{-1} = U_{sigma(k) sigma(l)}(t), so the SWAP
      // hops over the neighbor while relabeling it by the transposition.
      ExchangePulse moved = p[k];
      ExchangePulse crossed = relabeled(p[m], moved.i, moved.j);
      p[m] = moved;
      p[k] = crossed;
      return out;
    }
    case RewriteRule::kMergeSplit: {
      if (step.split_durations.empty()) {
        require(k >= 0 && k + 1 < n, "need two adjacent pulses");
        require(same_pair(p[k], p[k + 1]), "adjacent pulses act on different pairs");
        p[k].t = reduce_duration(p[k].t + p[k + 1].t);
        p.erase(p.begin() + k + 1);
      } else {
        require(step.split_durations.size() == 2, "split needs two durations");
        require(k >= 0 && k < n, "position out of range");
        const double t1 = reduce_duration(step.split_durations[0]);
        const double t2 = reduce_duration(step.split_durations[1]);
        require(std::abs(reduce_duration(t1 + t2) - p[k].t) < 1e-9,
                "split durations do not sum to the pulse duration (mod 2)");
        ExchangePulse second{p[k].i, p[k].j, t2};
        p[k].t = t1;
        p.insert(p.begin() + k + 1, second);
      }
      return out;
    }
    case RewriteRule::kSwapPairInsert: {
      require(k >= 0 && k <= n, "position out of range");
      require(step.i != step.j, "pair requires i != j");
      ExchangePulse s{std::min(step.i, step.j), std::max(step.i, step.j), 1.0};
      p.insert(p.begin() + k, 2, s);
      return out;
    }
    case RewriteRule::kSwapPairRemove: {
      require(k >= 0 && k + 1 < n, "need two adjacent pulses");
      require(is_swap_pulse(p[k]) && is_swap_pulse(p[k + 1]) &&
                  same_pair(p[k], p[k + 1]),
              "not an adjacent equal SWAP pair");
      p.erase(p.begin() + k, p.begin() + k + 2);
      return out;
    }
    case RewriteRule::kThreeSwapReduce: {
      require(k >= 0 && k + 2 < n, "need three adjacent pulses");
      const ExchangePulse &a = p[k], &b = p[k + 1], &c = p[k + 2];
      require(is_swap_pulse(a) && is_swap_pulse(b) && is_swap_pulse(c),
              "three SWAPs required");
      require(same_pair(a, c) && !same_pair(a, b), "pattern is s s' s");
      int shared = -1;
      for (int x : {a.i, a.j})
        if (x == b.i || x == b.j) shared = x;
      require(shared >= 0, "middle SWAP must share one spin");
      // (-P_ij)(-P_jk)(-P_ij) = -P_ik exactly.
      const int u = a.i == shared ? a.j : a.i;
      const int v = b.i == shared ? b.j : b.i;
      ExchangePulse s{std::min(u, v), std::max(u, v), 1.0};
      p[k] = s;
      p.erase(p.begin() + k + 1, p.begin() + k + 3);
      return out;
    }
    case RewriteRule::kDropZeroPulse: {
      require(k >= 0 && k < n, "position out of range");
      require(is_zero_pulse(p[k]), "pulse has nonzero duration");
      p.erase(p.begin() + k);
      return out;
    }
  }
  throw std::logic_error("unknown rewrite rule");
}

bool verify_step(const PulseSequence& seq, const RewriteStep& step) {
  PulseSequence after;
  try {
    after = apply_step(seq, step);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const Matrix a = seq.unitary();
  const Matrix b = after.unitary();
  return (a - b).cwiseAbs().maxCoeff() < 1e-12;
}

NormalizeResult normalize(const PulseSequence& seq, Layout target_layout) {
  NormalizeResult result;
  result.reduced = seq;
  result.residual_perm = identity_perm(seq.n_spins);
  Pulses& p = result.reduced.pulses;

  const auto merge_pass = [&p]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        if (same_pair(p[k], p[k + 1])) {
          p[k].t = reduce_duration(p[k].t + p[k + 1].t);
          p.erase(p.begin() + k + 1);
          changed = true;
          break;
        }
      }
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (is_zero_pulse(p[k])) {
          p.erase(p.begin() + k);
          changed = true;
          break;
        }
      }
    }
  };

  merge_pass();
  if (target_layout == Layout::kComplete) {
    result.reduced.layout = Layout::kComplete;
    result.reduced.rewrite_output = true;
    // Commute SWAPs off the right end, rightmost first, remerging after each.
    while (true) {
      int idx = -1;
      for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        if (is_swap_pulse(p[k])) {
          idx = k;
          break;
        }
      }
      if (idx < 0) break;
      ExchangePulse s = p[idx];
      for (std::size_t k = idx; k + 1 < p.size(); ++k)
        p[k] = relabeled(p[k + 1], s.i, s.j);
      p.pop_back();
      result.residual_swaps.push_back(s);
      result.phase *= -1.0;  // U_ij(1) = -P_ij
      merge_pass();
    }
    // Compose the residual permutation in time order.
    for (const ExchangePulse& s : result.residual_swaps)
      std::swap(result.residual_perm[s.i], result.residual_perm[s.j]);
  }

  // Absorbable: the permutation keeps each encoded triple {0,1,2}, {3,4,5},
  // ... on itself (checked for registers that are whole qubit triples).
  if (seq.n_spins % 3 == 0) {
    for (int i = 0; i < seq.n_spins; ++i)
      if (result.residual_perm[i] / 3 != i / 3) result.residual_absorbable = false;
  }
  return result;
}

PulseSequence replay(const RewriteTrace& trace) {
  PulseSequence cur = trace.start;
  for (const RewriteStep& step : trace.steps) cur = apply_step(cur, step);
  return cur;
}

bool verify_trace(const RewriteTrace& trace) {
  PulseSequence replayed = replay(trace);
  // replayed must equal end ++ residual, entry for entry.
  const std::size_t nr = trace.residual.size();
  if (replayed.pulses.size() != trace.end.pulses.size() + nr) return false;
  for (std::size_t k = 0; k < trace.end.pulses.size(); ++k) {
    const auto &a = replayed.pulses[k], &b = trace.end.pulses[k];
    if (a.i != b.i || a.j != b.j || std::abs(a.t - b.t) > 1e-12) return false;
  }
  for (std::size_t k = 0; k < nr; ++k) {
    const auto& a = replayed.pulses[trace.end.pulses.size() + k];
    const auto& b = trace.residual[k];
    if (a.i != b.i || a.j != b.j || std::abs(a.t - b.t) > 1e-12) return false;
  }
  // And the replay itself must be unitary-exact against the start.
  return (trace.start.unitary() - replayed.unitary()).cwiseAbs().maxCoeff() <
         1e-12;
}

namespace {

RewriteStep commute(int pos, int dir) {
  RewriteStep s;
  s.rule = RewriteRule::kSwapCommute;
  s.position = pos;
  s.direction = dir;
  return s;
}

RewriteStep merge_at(int pos) {
  RewriteStep s;
  s.rule = RewriteRule::kMergeSplit;
  s.position = pos;
  return s;
}

RewriteStep split_at(int pos, double t1, double t2) {
  RewriteStep s;
  s.rule = RewriteRule::kMergeSplit;
  s.position = pos;
  s.split_durations = {t1, t2};
  return s;
}

}  // namespace

RewriteTrace fw_equivalence_trace() {
  RewriteTrace trace;
  trace.start.n_spins = 6;
  trace.start.layout = Layout::kLinear;
  for (auto [i, j, t] : std::initializer_list<std::tuple<int, int, double>>{
           {2, 3, 0.5}, {3, 4, 1.5}, {2, 3, 1.0}, {4, 5, 1.0}, {3, 4, 0.5},
           {2, 3, 1.5}, {1, 2, 1.0}, {2, 3, 0.5}, {3, 4, 1.5}, {2, 3, 1.0},
           {4, 5, 1.0}, {3, 4, 0.5}, {2, 3, 1.5}, {1, 2, 1.0}, {2, 3, 0.5},
           {3, 4, 1.5}, {2, 3, 1.0}, {4, 5, 1.0}, {3, 4, 0.5}, {2, 3, 1.5}})
    trace.start.pulses.push_back({i, j, t});

  trace.steps = {
      commute(10, +1), commute(9, +1),  commute(11, +1), merge_at(10),
      commute(16, +1), commute(17, +1), split_at(14, 0.5, 1.0),
      commute(15, +1), commute(16, +1), commute(15, -1), commute(12, +1),
      commute(13, +1), commute(13, -1), commute(11, +1), commute(11, -1),
      commute(10, -1), commute(9, -1),  commute(8, -1),  commute(6, +1),
      commute(6, -1),  commute(5, -1),  commute(3, +1),  commute(2, -1),
      merge_at(2),     commute(3, +1),  commute(4, +1),  merge_at(0),
      split_at(3, 1.0, 0.5), commute(3, -1), commute(2, -1), commute(5, +1),
      commute(6, +1)};

  trace.end.n_spins = 6;
  trace.end.layout = Layout::kLinear;
  for (auto [i, j, t] : std::initializer_list<std::tuple<int, int, double>>{
           {2, 3, 1.5}, {3, 4, 1.0}, {2, 3, 0.5}, {4, 5, 0.5}, {3, 4, 0.5},
           {1, 2, 1.0}, {2, 3, 0.5}, {4, 5, 1.0}, {3, 4, 1.5}, {1, 2, 0.5},
           {2, 3, 0.5}, {4, 5, 1.0}, {3, 4, 0.5}, {1, 2, 1.0}, {2, 3, 0.5},
           {4, 5, 0.5}, {3, 4, 1.0}, {2, 3, 1.5}})
    trace.end.pulses.push_back({i, j, t});

  trace.residual = {{4, 5, 1.0}};
  return trace;
}

namespace {

using nlohmann::json;

std::string rule_name(RewriteRule r) {
  switch (r) {
    case RewriteRule::kSwapCommute: return "SwapCommute";
    case RewriteRule::kMergeSplit: return "MergeSplit";
    case RewriteRule::kSwapPairInsert: return "SwapPairInsert";
    case RewriteRule::kSwapPairRemove: return "SwapPairRemove";
    case RewriteRule::kThreeSwapReduce: return "ThreeSwapReduce";
    case RewriteRule::kDropZeroPulse: return "DropZeroPulse";
  }
  return "?";
}

RewriteRule rule_from_name(const std::string& s) {
  if (s == "SwapCommute") return RewriteRule::kSwapCommute;
  if (s == "MergeSplit") return RewriteRule::kMergeSplit;
  if (s == "SwapPairInsert") return RewriteRule::kSwapPairInsert;
  if (s == "SwapPairRemove") return RewriteRule::kSwapPairRemove;
  if (s == "ThreeSwapReduce") return RewriteRule::kThreeSwapReduce;
  if (s == "DropZeroPulse") return RewriteRule::kDropZeroPulse;
  throw std::invalid_argument("unknown rewrite rule: " + s);
}

json pulses_json(const std::vector<ExchangePulse>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back({{"i", p.i}, {"j", p.j}, {"t", p.t}});
  return out;
}

std::vector<ExchangePulse> pulses_from(const json& j) {
  std::vector<ExchangePulse> out;
  for (const auto& e : j)
    out.push_back({e.at("i").get<int>(), e.at("j").get<int>(),
                   reduce_duration(e.at("t").get<double>())});
  return out;
}

}  // namespace

std::string serialize(const RewriteTrace& trace) {
  json doc;
  doc["n_spins"] = trace.start.n_spins;
  doc["start"] = pulses_json(trace.start.pulses);
  doc["steps"] = json::array();
  for (const RewriteStep& s : trace.steps) {
    json step;
    step["rule"] = rule_name(s.rule);
    step["position"] = s.position;
    json params = json::array();
    if (s.rule == RewriteRule::kSwapCommute) params.push_back(s.direction);
    for (double d : s.split_durations) params.push_back(d);
    if (s.rule == RewriteRule::kSwapPairInsert) {
      params.push_back(s.i);
      params.push_back(s.j);
    }
    step["params"] = params;
    doc["steps"].push_back(step);
  }
  doc["end"] = pulses_json(trace.end.pulses);
  doc["residual"] = pulses_json(trace.residual);
  return doc.dump(2);
}

RewriteTrace parse_trace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed trace file: ") + e.what());
  }
  RewriteTrace trace;
  const int n = doc.at("n_spins").get<int>();
  trace.start.n_spins = trace.end.n_spins = n;
  trace.start.pulses = pulses_from(doc.at("start"));
  trace.end.pulses = pulses_from(doc.at("end"));
  if (doc.contains("residual")) trace.residual = pulses_from(doc.at("residual"));
  for (const auto& e : doc.at("steps")) {
    RewriteStep s;
    s.rule = rule_from_name(e.at("rule").get<std::string>());
    s.position = e.at("position").get<int>();
    const auto& params = e.at("params");
    switch (s.rule) {
      case RewriteRule::kSwapCommute:
        s.direction = params.at(0).get<int>();
        break;
      case RewriteRule::kMergeSplit:
        for (const auto& d : params) s.split_durations.push_back(d.get<double>());
        break;
      case RewriteRule::kSwapPairInsert:
        s.i = params.at(0).get<int>();
        s.j = params.at(1).get<int>();
        break;
      default:
        break;
    }
    trace.steps.push_back(s);
  }
  return trace;
}

}  // namespace xpulse
