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

#include <random>

#include "xpulse/gate_library.hpp"
#include "xpulse/rewrite_engine.hpp"

using namespace xpulse;

namespace {

PulseSequence seq_of(std::initializer_list<ExchangePulse> pulses, int n = 6) {
  PulseSequence s;
  s.n_spins = n;
  s.layout = Layout::kComplete;
  s.pulses = pulses;
  return s;
}

RewriteStep commute_step(int pos, int dir) {
  RewriteStep s;
  s.rule = RewriteRule::kSwapCommute;
  s.position = pos;
  s.direction = dir;
  return s;
}

}  // namespace

TEST_CASE("SWAP commutes past a pulse by relabeling it") {
  // SWAP(0,1) then pulse(1,2,t)  ->  pulse(0,2,t) then SWAP(0,1)
  const PulseSequence seq = seq_of({{0, 1, 1.0}, {1, 2, 0.4}}, 3);
  const PulseSequence out = apply_step(seq, commute_step(0, +1));
  CHECK(out.pulses[0].i == 0);
  CHECK(out.pulses[0].j == 2);
  CHECK(out.pulses[0].t == doctest::Approx(0.4));
  CHECK(is_swap_pulse(out.pulses[1]));
  CHECK(verify_step(seq, commute_step(0, +1)));
}

TEST_CASE("commuting across a non-SWAP without relabeling is wrong") {
  // the rule itself relabels; faking it by hand breaks the unitary
  const PulseSequence seq = seq_of({{0, 1, 1.0}, {1, 2, 0.3}}, 3);
  PulseSequence faked = seq;
  std::swap(faked.pulses[0], faked.pulses[1]);
  CHECK((seq.unitary() - faked.unitary()).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("inverse root-SWAP splits into SWAP and root-SWAP") {
  const PulseSequence seq = seq_of({{0, 1, 1.5}}, 2);
  RewriteStep split;
  split.rule = RewriteRule::kMergeSplit;
  split.position = 0;
  split.split_durations = {1.0, 0.5};
  const PulseSequence out = apply_step(seq, split);
  REQUIRE(out.pulses.size() == 2);
  CHECK(is_swap_pulse(out.pulses[0]));
  CHECK(out.pulses[1].t == doctest::Approx(0.5));
  CHECK(verify_step(seq, split));
}

TEST_CASE("three nearest-neighbor SWAPs reduce to one") {
  const PulseSequence seq =
      seq_of({{0, 1, 1.0}, {1, 2, 1.0}, {0, 1, 1.0}}, 3);
  RewriteStep step;
  step.rule = RewriteRule::kThreeSwapReduce;
  step.position = 0;
  const PulseSequence out = apply_step(seq, step);
  REQUIRE(out.pulses.size() == 1);
  CHECK(out.pulses[0].i == 0);
  CHECK(out.pulses[0].j == 2);
  CHECK(verify_step(seq, step));
}

TEST_CASE("SWAP pair insertion is exact anywhere") {
  const PulseSequence seq = seq_of({{1, 2, 0.7}, {3, 4, 0.2}}, 5);
  RewriteStep step;
  step.rule = RewriteRule::kSwapPairInsert;
  step.position = 1;
  step.i = 2;
  step.j = 3;
  CHECK(verify_step(seq, step));
  const PulseSequence out = apply_step(seq, step);
  RewriteStep rm;
  rm.rule = RewriteRule::kSwapPairRemove;
  rm.position = 1;
  CHECK(verify_step(out, rm));
}

TEST_CASE("inapplicable rules carry diagnostics") {
  const PulseSequence seq = seq_of({{0, 1, 0.5}, {1, 2, 0.5}}, 3);
  RewriteStep step;
  step.rule = RewriteRule::kMergeSplit;
  step.position = 0;
  CHECK_THROWS_WITH_AS(apply_step(seq, step),
                       doctest::Contains("different pairs"),
                       std::invalid_argument);
  step.rule = RewriteRule::kSwapCommute;
  CHECK_THROWS_WITH_AS(apply_step(seq, step), doctest::Contains("not a SWAP"),
                       std::invalid_argument);
}

TEST_CASE("normalize merges, drops zeros, and is idempotent") {
  const PulseSequence seq = seq_of(
      {{0, 1, 0.5}, {0, 1, 1.5}, {1, 2, 0.0}, {2, 3, 0.3}, {2, 3, 0.4}}, 4);
  const NormalizeResult res = normalize(seq, Layout::kLinear);
  REQUIRE(res.reduced.pulses.size() == 1);
  CHECK(res.reduced.pulses[0].t == doctest::Approx(0.7));
  const NormalizeResult again = normalize(res.reduced, Layout::kLinear);
  CHECK(again.reduced.pulses.size() == 1);
}

TEST_CASE("normalize under complete layout extracts SWAPs exactly") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dur(0.0, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int c = 0; c < 30; ++c) {
    PulseSequence seq;
    seq.n_spins = 5;
    seq.layout = Layout::kComplete;
    std::uniform_int_distribution<int> spin(0, 4);
    for (int k = 0; k < 12; ++k) {
      int i = spin(rng), j = spin(rng);
      if (i == j) j = (i + 1) % 5;
      seq.pulses.push_back({std::min(i, j), std::max(i, j),
                            coin(rng) < 0.4 ? 1.0 : reduce_duration(dur(rng))});
    }
    const NormalizeResult res = normalize(seq, Layout::kComplete);
    // no SWAPs and no zero pulses remain in the core
    for (const auto& p : res.reduced.pulses) {
      CHECK(!is_swap_pulse(p));
      CHECK(!is_zero_pulse(p));
    }
    CHECK(res.reduced.pulses.size() <= seq.pulses.size());
    // exact bookkeeping: U(orig) = phase * perm * U(reduced)
    const Matrix lhs = seq.unitary();
    const Matrix rhs = res.phase *
                       permutation_operator(5, res.residual_perm) *
                       res.reduced.unitary();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
    // idempotent
    const NormalizeResult again = normalize(res.reduced, Layout::kComplete);
    CHECK(again.reduced.pulses.size() == res.reduced.pulses.size());
    CHECK(again.residual_swaps.empty());
  }
}

TEST_CASE("trace fixture replays exactly") {
  const RewriteTrace trace = fw_equivalence_trace();
  CHECK(trace.steps.size() > 0);
  CHECK(verify_trace(trace));
  // every intermediate step is exact on its own
  PulseSequence cur = trace.start;
  for (const RewriteStep& step : trace.steps) {
    CHECK(verify_step(cur, step));
    cur = apply_step(cur, step);
  }
  // the end state is the compact representation
  const PulseSequence rhs = fw_sequence(FwVariant::kRhs);
  REQUIRE(trace.end.pulses.size() == rhs.pulses.size());
  for (std::size_t k = 0; k < rhs.pulses.size(); ++k) {
    CHECK(trace.end.pulses[k].i == rhs.pulses[k].i);
    CHECK(trace.end.pulses[k].t == doctest::Approx(rhs.pulses[k].t));
  }
  // the separated SWAP is a single-qubit pulse
  REQUIRE(trace.residual.size() == 1);
  CHECK(trace.residual[0].i / 3 == trace.residual[0].j / 3);
}

TEST_CASE("trace JSON round trip") {
  const RewriteTrace trace = fw_equivalence_trace();
  const RewriteTrace back = parse_trace(serialize(trace));
  CHECK(back.steps.size() == trace.steps.size());
  CHECK(verify_trace(back));
}

TEST_CASE("normalize reproduces the connectivity reductions") {
  CHECK(normalize(fw_sequence(FwVariant::kLhs), Layout::kComplete)
            .reduced.pulses.size() == 12);
  CHECK(normalize(fw_sequence(FwVariant::kRhs), Layout::kComplete)
            .reduced.pulses.size() == 12);
}
