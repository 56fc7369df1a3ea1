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

#include <random>

#include "benchmark/benchmark.h"
#include "eidi/eval.h"
#include "eidi/mock.h"
#include "eidi/pipeline.h"
#include "eidi/world.h"

namespace {

eidi::ScoredDataset RandomDataset(std::size_t n) {
  std::mt19937_64 rng(n);
  eidi::ScoredDataset data;
  for (std::size_t i = 0; i < n; ++i) {
    data.pairs.push_back({std::to_string(i), static_cast<double>(rng() % 1000) / 999.0,
                          rng() % 2 == 0});
  }
  data.pairs[0].gold = true;
  data.pairs[1].gold = false;
  return data;
}

void BM_AucNorm(benchmark::State& state) {
  const auto data = RandomDataset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eidi::AucNorm(data));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AucNorm)->Arg(64)->Arg(1784)->Arg(100000);

void BM_MockEidiEntry(benchmark::State& state) {
  eidi::WorldParams params;
  params.entries = 200;
  const eidi::Scenario scenario = eidi::GenerateWorld(params);
  eidi::MockBackend backend(scenario.world);
  const eidi::PipelineConfig config;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& entry = scenario.dataset.entries[i++ % scenario.dataset.entries.size()];
    benchmark::DoNotOptimize(eidi::RunEidi(entry, config, backend));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MockEidiEntry);

void BM_EidiSweep(benchmark::State& state) {
  eidi::WorldParams params;
  params.entries = 1000;
  const eidi::Scenario scenario = eidi::GenerateWorld(params);
  eidi::MockBackend backend(scenario.world);
  std::vector<eidi::RunRecord> records;
  for (const auto& entry : scenario.dataset.entries) {
    records.push_back(eidi::RunEidi(entry, eidi::PipelineConfig{}, backend));
  }
  const auto gold = eidi::GoldLabels(scenario.dataset);
  for (auto _ : state) benchmark::DoNotOptimize(eidi::EidiSweep(records, gold));
}
BENCHMARK(BM_EidiSweep);

}  // namespace

BENCHMARK_MAIN();
