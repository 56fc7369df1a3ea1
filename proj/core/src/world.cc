// Copyright 2026 The EIDI Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eidi/world.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <string_view>

#include "eidi/errors.h"
#include "eidi/hash.h"

namespace eidi {
namespace {

constexpr std::array<std::string_view, 10> kTypes = {
    "person", "organization", "location", "disease", "medicine",
    "food",   "animal",       "country",  "company", "city"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform() { return ToUnitInterval(engine_()); }
  bool Bernoulli(double p) { return Uniform() < p; }
  std::size_t Index(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(Uniform() * n));
  }

 private:
  std::mt19937_64 engine_;
};

Triple HypothesisFor(const EntailmentEntry& entry, const std::string& s,
                     const std::string& o) {
  return entry.order == ArgOrder::kAligned
             ? Triple{s, entry.hypothesis.predicate, o}
             : Triple{o, entry.hypothesis.predicate, s};
}

}  // namespace

Scenario GenerateWorld(const WorldParams& params) {
  if (params.entries == 0 || params.alternatives_per_entry == 0) {
    throw InvalidInputError("world needs at least one entry and alternative");
  }
  Rng rng(params.seed);
  Scenario scenario;
  scenario.dataset.source_path = "synthetic";
  MockWorld& world = scenario.world;
  world.noise_seed = params.seed;
  world.bias = params.bias;
  world.jitter = params.jitter;

  for (std::size_t i = 0; i < params.entries; ++i) {
    const std::string tag = std::to_string(i + 1);
    const std::string subject_type(kTypes[rng.Index(kTypes.size())]);
    const std::string object_type(kTypes[rng.Index(kTypes.size())]);

    EntailmentEntry entry;
    entry.id = tag;
    entry.gold = rng.Bernoulli(params.positive_rate);
    entry.order = rng.Bernoulli(params.swapped_rate) ? ArgOrder::kSwapped
                                                     : ArgOrder::kAligned;
    // Distinct argument names keep the argument order recoverable even when
    // both types coincide.
    entry.premise = {subject_type + "_s" + tag, "prel_" + tag,
                     object_type + "_o" + tag};
    entry.hypothesis.predicate = "hrel_" + tag;
    entry.hypothesis =
        HypothesisFor(entry, entry.premise.subject, entry.premise.object);
    entry.subject_type = subject_type;
    entry.object_type = object_type;

    const bool hypothesis_attested =
        rng.Bernoulli(params.hypothesis_attested_rate);
    if (hypothesis_attested) world.attested_facts.insert(entry.hypothesis);

    world.typing_table[entry.premise] = {subject_type, object_type};

    const double typed_rate = entry.gold ? params.typed_attested_if_entailed
                                         : params.typed_attested_if_not;
    if (rng.Bernoulli(typed_rate)) {
      world.attested_facts.insert(
          HypothesisFor(entry, subject_type, object_type));
    }

    const double alt_rate = std::clamp(
        (entry.gold ? params.alt_attested_if_entailed
                    : params.alt_attested_if_not) +
            (hypothesis_attested ? params.attestation_coupling
                                 : -params.attestation_coupling),
        0.0, 1.0);
    auto& alternatives = world.alternatives_table[entry.premise];
    for (std::size_t j = 0; j < params.alternatives_per_entry; ++j) {
      const std::string alt_tag = tag + "_" + std::to_string(j + 1);
      Triple alt{subject_type + "_s" + alt_tag, entry.premise.predicate,
                 object_type + "_o" + alt_tag};
      world.attested_facts.insert(alt);
      if (rng.Bernoulli(alt_rate)) {
        world.attested_facts.insert(
            HypothesisFor(entry, alt.subject, alt.object));
      }
      alternatives.push_back(std::move(alt));
    }
    scenario.dataset.entries.push_back(std::move(entry));
  }
  return scenario;
}

void WriteScenario(const Scenario& scenario, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  SaveMockWorld(scenario.world, dir / "world.json");
  {
    std::ofstream out(dir / "dataset.tsv", std::ios::binary | std::ios::trunc);
    WriteLevyHolt(scenario.dataset, out);
    if (!out) throw Error("cannot write " + (dir / "dataset.tsv").string());
  }
  std::ofstream out(dir / "types.tsv", std::ios::binary | std::ios::trunc);
  for (const auto& entry : scenario.dataset.entries) {
    if (entry.subject_type && entry.object_type) {
      out << entry.id << '\t' << *entry.subject_type << '\t'
          << *entry.object_type << '\n';
    }
  }
  if (!out) throw Error("cannot write " + (dir / "types.tsv").string());
}

}  // namespace eidi
