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
#include "xpulse/pulse_sequence.hpp"

using namespace xpulse;

TEST_CASE("serialize/parse round trip preserves durations bit-exactly") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dur(0.0, 2.0);
  for (int c = 0; c < 25; ++c) {
    PulseSequence seq;
    seq.n_spins = 6;
    seq.layout = c % 2 ? Layout::kComplete : Layout::kLinear;
    std::uniform_int_distribution<int> spin(0, 4);
    for (int k = 0; k < 10; ++k) {
      int i = spin(rng);
      int j = c % 2 ? (i + 2) % 6 : i + 1;
      if (c % 2 == 0) j = i + 1;
      seq.pulses.push_back({std::min(i, j), std::max(i, j),
                            reduce_duration(dur(rng))});
    }
    const PulseSequence back = parse_sequence(serialize(seq));
    REQUIRE(back.pulses.size() == seq.pulses.size());
    for (std::size_t k = 0; k < seq.pulses.size(); ++k) {
      CHECK(back.pulses[k].i == seq.pulses[k].i);
      CHECK(back.pulses[k].j == seq.pulses[k].j);
      CHECK(back.pulses[k].t == seq.pulses[k].t);  // bit-exact
    }
    CHECK(back.layout == seq.layout);
  }
}

TEST_CASE("durations outside [0,2) are reduced on parse") {
  const std::string doc = R"({"n_spins": 3, "layout": "linear",
      "pulses": [{"i": 0, "j": 1, "t": 2.5}]})";
  const PulseSequence seq = parse_sequence(doc);
  CHECK(seq.pulses[0].t == doctest::Approx(0.5));
}

TEST_CASE("i == j and malformed documents are rejected") {
  CHECK_THROWS_AS(parse_sequence(R"({"n_spins": 3, "layout": "linear",
      "pulses": [{"i": 1, "j": 1, "t": 0.5}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence(R"({"n_spins": 3, "layout": "ring",
      "pulses": []})"),
                  std::invalid_argument);
  // non-nearest-neighbor under linear layout
  CHECK_THROWS_AS(parse_sequence(R"({"n_spins": 4, "layout": "linear",
      "pulses": [{"i": 0, "j": 2, "t": 0.5}]})"),
                  std::invalid_argument);
  // ... but fine with an explicit edge list that includes the pair
  const PulseSequence ok = parse_sequence(R"({"n_spins": 4,
      "layout": {"edges": [[0, 2]]}, "pulses": [{"i": 0, "j": 2, "t": 0.5}]})");
  CHECK(ok.layout == Layout::kExplicit);
}

TEST_CASE("pulse counting conventions") {
  PulseSequence seq;
  seq.n_spins = 4;
  seq.pulses = {{0, 1, 0.5}, {1, 2, 1.0}, {2, 3, 0.0}, {0, 1, 1.5}};
  CHECK(pulse_count(seq, CountMode::kAll) == 4);
  CHECK(pulse_count(seq, CountMode::kNonSwap) == 2);
  PulseSequence empty;
  empty.n_spins = 2;
  CHECK(pulse_count(empty, CountMode::kAll) == 0);
  CHECK(pulse_count(seq, CountMode::kAll) >=
        pulse_count(seq, CountMode::kNonSwap));
}

TEST_CASE("package serialization keeps the corrections") {
  const GateSequencePackage pkg = cphase_package(1.2);
  const GateSequencePackage back = parse_package(serialize(pkg));
  CHECK(back.core.pulses.size() == pkg.core.pulses.size());
  CHECK(back.post_corrections.pulses.size() ==
        pkg.post_corrections.pulses.size());
  CHECK(back.post_corrections.pulses[0].t ==
        pkg.post_corrections.pulses[0].t);
}

TEST_CASE("headline pulse counts of the packaged gates") {
  CHECK(pulse_count(controlled_rotation_package(0.4).core, CountMode::kAll) ==
        28);
  CHECK(pulse_count(cphase_package(2.0).core, CountMode::kAll) == 25);
  CHECK(pulse_count(fw_sequence(FwVariant::kRhs), CountMode::kAll) == 18);
  // corrections act within one qubit triple only
  for (const auto& pkg :
       {controlled_rotation_package(0.4), cphase_package(2.0)}) {
    for (const auto& side : {pkg.pre_corrections, pkg.post_corrections})
      for (const auto& p : side.pulses) CHECK(p.i / 3 == p.j / 3);
  }
}
