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
#include "xpulse/pulse_sequence.hpp"

#include <json.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xpulse {

using nlohmann::json;

PulseSequence GateSequencePackage::combined() const {
  PulseSequence out = core;
  out.pulses.clear();
  out.pulses.insert(out.pulses.end(), pre_corrections.pulses.begin(),
                    pre_corrections.pulses.end());
  out.pulses.insert(out.pulses.end(), core.pulses.begin(), core.pulses.end());
  out.pulses.insert(out.pulses.end(), post_corrections.pulses.begin(),
                    post_corrections.pulses.end());
  return out;
}

void validate(const PulseSequence& seq) {
  if (seq.n_spins < 2 || seq.n_spins > 12)
    throw std::invalid_argument("n_spins must be in [2, 12]");
  int k = 0;
  for (const ExchangePulse& p : seq.pulses) {
    if (p.i == p.j)
      throw std::invalid_argument("pulse " + std::to_string(k) +
                                  ": i == j is not a valid exchange pulse");
    if (p.i < 0 || p.i >= seq.n_spins || p.j < 0 || p.j >= seq.n_spins)
      throw std::invalid_argument("pulse " + std::to_string(k) +
                                  ": spin index out of range");
    if (p.t < 0.0 || p.t >= 2.0)
      throw std::invalid_argument("pulse " + std::to_string(k) +
                                  ": duration not reduced to [0, 2)");
    if (seq.layout == Layout::kLinear && !seq.rewrite_output &&
        std::abs(p.i - p.j) != 1)
      throw std::invalid_argument("pulse " + std::to_string(k) +
                                  ": non-nearest-neighbor under linear layout");
    if (seq.layout == Layout::kExplicit) {
      const bool found =
          std::any_of(seq.edges.begin(), seq.edges.end(), [&](auto e) {
            return (e.first == p.i && e.second == p.j) ||
                   (e.first == p.j && e.second == p.i);
          });
      if (!found)
        throw std::invalid_argument("pulse " + std::to_string(k) +
                                    ": pair not in the edge list");
    }
    ++k;
  }
}

int pulse_count(const PulseSequence& seq, CountMode mode) {
  if (mode == CountMode::kAll) return static_cast<int>(seq.pulses.size());
  int n = 0;
  for (const ExchangePulse& p : seq.pulses)
    if (!is_swap_pulse(p) && !is_zero_pulse(p)) ++n;
  return n;
}

namespace {

json layout_to_json(const PulseSequence& seq) {
  switch (seq.layout) {
    case Layout::kLinear:
      return "linear";
    case Layout::kComplete:
      return "complete";
    case Layout::kExplicit: {
      json edges = json::array();
      for (auto [a, b] : seq.edges) edges.push_back({a, b});
      return json{{"edges", edges}};
    }
  }
  throw std::logic_error("unknown layout");
}

void layout_from_json(const json& j, PulseSequence& seq) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "linear")
      seq.layout = Layout::kLinear;
    else if (s == "complete")
      seq.layout = Layout::kComplete;
    else
      throw std::invalid_argument("layout: expected linear|complete|{edges}");
  } else if (j.is_object() && j.contains("edges")) {
    seq.layout = Layout::kExplicit;
    for (const auto& e : j.at("edges"))
      seq.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  } else {
    throw std::invalid_argument("layout: expected linear|complete|{edges}");
  }
}

json pulses_to_json(const std::vector<ExchangePulse>& pulses) {
  json out = json::array();
  for (const ExchangePulse& p : pulses)
    out.push_back({{"i", p.i}, {"j", p.j}, {"t", p.t}});
  return out;
}

std::vector<ExchangePulse> pulses_from_json(const json& j) {
  std::vector<ExchangePulse> out;
  int k = 0;
  for (const auto& e : j) {
    ExchangePulse p;
    p.i = e.at("i").get<int>();
    p.j = e.at("j").get<int>();
    p.t = reduce_duration(e.at("t").get<double>());
    if (p.i == p.j)
      throw std::invalid_argument("pulses[" + std::to_string(k) +
                                  "]: i == j");
    out.push_back(p);
    ++k;
  }
  return out;
}

json sequence_to_json(const PulseSequence& seq) {
  json doc;
  doc["n_spins"] = seq.n_spins;
  doc["layout"] = layout_to_json(seq);
  doc["pulses"] = pulses_to_json(seq.pulses);
  if (seq.rewrite_output) doc["rewrite_output"] = true;
  return doc;
}

PulseSequence sequence_from_json(const json& doc) {
  PulseSequence seq;
  seq.n_spins = doc.at("n_spins").get<int>();
  layout_from_json(doc.at("layout"), seq);
  seq.pulses = pulses_from_json(doc.at("pulses"));
  seq.rewrite_output = doc.value("rewrite_output", false);
  validate(seq);
  return seq;
}

}  // namespace

std::string serialize(const PulseSequence& seq) {
  return sequence_to_json(seq).dump(2);
}

std::string serialize(const GateSequencePackage& package) {
  json doc = sequence_to_json(package.core);
  doc["corrections"] = {
      {"pre", pulses_to_json(package.pre_corrections.pulses)},
      {"post", pulses_to_json(package.post_corrections.pulses)}};
  return doc.dump(2);
}

PulseSequence parse_sequence(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed sequence file: ") +
                                e.what());
  }
  return sequence_from_json(doc);
}

GateSequencePackage parse_package(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed sequence file: ") +
                                e.what());
  }
  GateSequencePackage package;
  package.core = sequence_from_json(doc);
  package.pre_corrections.n_spins = package.core.n_spins;
  package.post_corrections.n_spins = package.core.n_spins;
  if (doc.contains("corrections")) {
    const auto& c = doc.at("corrections");
    if (c.contains("pre"))
      package.pre_corrections.pulses = pulses_from_json(c.at("pre"));
    if (c.contains("post"))
      package.post_corrections.pulses = pulses_from_json(c.at("post"));
  }
  return package;
}

PulseSequence drop_zero_pulses(const PulseSequence& seq) {
  PulseSequence out = seq;
  out.pulses.clear();
  for (const ExchangePulse& p : seq.pulses)
    if (!is_zero_pulse(p)) out.pulses.push_back(p);
  return out;
}

}  // namespace xpulse
