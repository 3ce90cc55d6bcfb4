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
#ifndef XPULSE_PULSE_SEQUENCE_HPP_
#define XPULSE_PULSE_SEQUENCE_HPP_

// The pulse-sequence data model: ordered exchange pulses on an n-spin
// register with a connectivity descriptor, JSON (de)serialization, and the
// pulse-counting conventions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xpulse/spin_system.hpp"

namespace xpulse {

enum class Layout { kLinear, kComplete, kExplicit };

struct PulseSequence {
  int n_spins = 0;
  Layout layout = Layout::kLinear;
  std::vector<std::pair<int, int>> edges;  // used when layout == kExplicit
  std::vector<ExchangePulse> pulses;
  // Rewriting may produce non-nearest-neighbor pulses on a linear register;
  // such sequences carry this flag instead of failing validation.
  bool rewrite_output = false;

  Matrix unitary() const { return apply_pulses(n_spins, pulses); }
};

// Core sequence plus the intra-qubit pulses pulled out on either side.
struct GateSequencePackage {
  PulseSequence core;
  PulseSequence pre_corrections;
  PulseSequence post_corrections;

  // pre, core and post concatenated in time order.
  PulseSequence combined() const;
};

// Throws std::invalid_argument with a field diagnostic on invariant
// violations (i == j, index out of range, non-nearest-neighbor pulse under a
// linear layout unless rewrite_output is set).
void validate(const PulseSequence& seq);

enum class CountMode { kAll, kNonSwap };

// kAll counts the stored pulses; kNonSwap counts pulses with t not in {0, 1}.
int pulse_count(const PulseSequence& seq, CountMode mode);

// JSON round trip. Durations are written with enough digits to survive the
// trip bit-exactly; parsing reduces durations mod 2 and validates.
std::string serialize(const PulseSequence& seq);
std::string serialize(const GateSequencePackage& package);
PulseSequence parse_sequence(const std::string& text);
GateSequencePackage parse_package(const std::string& text);

// Drops zero-duration pulses; keeps everything else untouched.
PulseSequence drop_zero_pulses(const PulseSequence& seq);

}  // namespace xpulse

#endif  // XPULSE_PULSE_SEQUENCE_HPP_
