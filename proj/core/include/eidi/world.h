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

#ifndef EIDI_WORLD_H_
#define EIDI_WORLD_H_

// Synthetic scenarios for the mock backend.
//
// Each generated entry gets a gold label, an argument order and an
// attestation label for its own hypothesis, drawn independently. The mock's
// transformation table lists attested alternative premises for every entry;
// the hypothesis of each alternative inquiry is attested with a probability
// that depends on the gold label (alternatives "agree" with the entailment),
// nudged by `attestation_coupling` towards the original hypothesis'
// attestation. Each alternative is drawn independently.

#include <cstdint>
#include <filesystem>

#include "eidi/dataset.h"
#include "eidi/mock.h"

namespace eidi {

struct WorldParams {
  std::size_t entries = 400;
  std::size_t alternatives_per_entry = 10;
  double positive_rate = 0.5;
  double swapped_rate = 0.3;
  double hypothesis_attested_rate = 0.5;
  double alt_attested_if_entailed = 0.75;
  double alt_attested_if_not = 0.25;
  double attestation_coupling = 0.1;
  // Type-placeholder hypotheses, for the type baseline.
  double typed_attested_if_entailed = 0.6;
  double typed_attested_if_not = 0.4;
  double bias = 0.95;
  double jitter = 0.02;
  std::uint64_t seed = 1;
};

struct Scenario {
  MockWorld world;
  Dataset dataset;  // entries carry sidecar types
};

// Deterministic for fixed params on every platform.
Scenario GenerateWorld(const WorldParams& params);

// Writes <dir>/world.json, <dir>/dataset.tsv and <dir>/types.tsv.
void WriteScenario(const Scenario& scenario, const std::filesystem::path& dir);

}  // namespace eidi

#endif  // EIDI_WORLD_H_
