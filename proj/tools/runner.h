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

#ifndef EIDI_TOOLS_RUNNER_H_
#define EIDI_TOOLS_RUNNER_H_

// Resumable execution of one method over a dataset.
//
// A run lives in <out>/runs/<run_id>/ as manifest.json + records.jsonl
// (+ errors.tsv when some entries could not reach the backend). The manifest
// is written before the first record and gains a "finished" timestamp once
// every dataset entry has a record. Records already on disk are never
// recomputed; entries whose backend calls failed are left out so a rerun
// picks them up.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "eidi/dataset.h"
#include "eidi/llm.h"
#include "eidi/pipeline.h"
#include "eidi/record_io.h"

namespace eidi::cli {

struct RunOptions {
  std::filesystem::path run_dir;
  std::string run_id;
  Method method = Method::kEidi;
  PipelineConfig config;
  std::string dataset_path;
  std::string dataset_digest;
  std::string backend_label;
  std::size_t max_in_flight = 8;
};

struct RunStats {
  std::size_t entries = 0;
  std::size_t already_recorded = 0;
  std::size_t processed = 0;
  std::size_t failed = 0;   // backend errors; not recorded
  std::size_t flagged = 0;  // recorded with soft-failure flags
  bool finished = false;
};

// Throws ValidationError when run_dir holds a run with a different
// method/config/dataset.
RunStats ExecuteRun(const RunOptions& options, const Dataset& dataset,
                    Backend& backend);

// UTC "YYYY-MM-DDTHH:MM:SSZ".
std::string UtcTimestamp();

}  // namespace eidi::cli

#endif  // EIDI_TOOLS_RUNNER_H_
