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
#ifndef XPULSE_REWRITE_ENGINE_HPP_
#define XPULSE_REWRITE_ENGINE_HPP_

// Exact rewrite rules on pulse sequences: every step preserves the sequence
// unitary exactly (including phase), because SWAP pulses are signed
// permutations and merging adds durations mod 2.

#include <optional>
#include <string>
#include <vector>

#include "xpulse/pulse_sequence.hpp"

namespace xpulse {

enum class RewriteRule {
  kSwapCommute,      // move the SWAP at `position` past one neighbor
  kMergeSplit,       // merge pulses (position, position+1) or split one pulse
  kSwapPairInsert,   // insert SWAP(i,j), SWAP(i,j) at `position`
  kSwapPairRemove,   // remove such an adjacent pair
  kThreeSwapReduce,  // SWAP(i,j) SWAP(j,k) SWAP(i,j) -> SWAP(i,k)
  kDropZeroPulse,    // delete a zero-duration pulse
};

struct RewriteStep {
  RewriteRule rule;
  int position = 0;
  // kSwapCommute: +1 moves the swap one slot later, -1 one slot earlier.
  int direction = +1;
  // kMergeSplit: empty means merge; {t1, t2} splits pulse at position.
  std::vector<double> split_durations;
  // kSwapPairInsert: the pair to insert.
  int i = 0, j = 0;
};

// Applies one step; throws std::invalid_argument with a diagnostic when the
// rule does not match at the position.
PulseSequence apply_step(const PulseSequence& seq, const RewriteStep& step);

// Simulates both sides in the full product space and checks exact equality
// (tolerance 1e-12 on entries).
bool verify_step(const PulseSequence& seq, const RewriteStep& step);

struct NormalizeResult {
  PulseSequence reduced;
  // SWAP pulses commuted off the end, in time order. The permutation they
  // compose is `residual_perm` (spin i ends at residual_perm[i]) and the
  // tracked sign makes the identity exact:
  //   unitary(input) = phase * perm_op(residual_perm) * unitary(reduced).
  std::vector<ExchangePulse> residual_swaps;
  std::vector<int> residual_perm;
  Complex phase = 1.0;
  // Residual permutation maps each encoded-qubit triple onto itself.
  bool residual_absorbable = true;
};

// Under kComplete: merge same-pair neighbors, drop zeros, and commute every
// SWAP off the end into the residual, to a fixpoint. Under kLinear: merging
// and zero-dropping only.
NormalizeResult normalize(const PulseSequence& seq, Layout target_layout);

struct RewriteTrace {
  PulseSequence start;
  std::vector<RewriteStep> steps;
  PulseSequence end;
  // Extracted single-qubit pulses, acting after `end` in time order:
  //   unitary(start) = unitary(residual) * unitary(end).
  std::vector<ExchangePulse> residual;
};

// Replays the steps from trace.start; throws if the result (after splitting
// off trace.residual) differs from trace.end.
PulseSequence replay(const RewriteTrace& trace);
bool verify_trace(const RewriteTrace& trace);

// The stored manipulation taking the derived Fong-Wandzura representation
// into its compact 18-pulse nearest-neighbor form plus one separated
// intra-qubit SWAP.
RewriteTrace fw_equivalence_trace();

// Trace file I/O (JSON list of {rule, position, params}).
std::string serialize(const RewriteTrace& trace);
RewriteTrace parse_trace(const std::string& text);

}  // namespace xpulse

#endif  // XPULSE_REWRITE_ENGINE_HPP_
