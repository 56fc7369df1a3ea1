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

#include "runner.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include "eidi/errors.h"
#include "eidi/log.h"
#include "eidi/parallel.h"

namespace eidi::cli {

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunStats ExecuteRun(const RunOptions& options, const Dataset& dataset,
                    Backend& backend) {
  ValidateConfig(options.config);
  std::filesystem::create_directories(options.run_dir);
  const auto manifest_path = options.run_dir / "manifest.json";
  const auto records_path = options.run_dir / "records.jsonl";
  const auto errors_path = options.run_dir / "errors.tsv";

  RunManifest manifest;
  manifest.run_id = options.run_id;
  manifest.method = options.method;
  manifest.config = options.config;
  manifest.model_name = options.config.model_name;
  manifest.dataset_path = options.dataset_path;
  manifest.dataset_digest = options.dataset_digest;
  manifest.entry_count = dataset.entries.size();
  manifest.template_hashes = AllTemplateHashes();
  manifest.backend = options.backend_label;

  if (std::filesystem::exists(manifest_path)) {
    const RunManifest existing = ReadManifest(manifest_path);
    if (existing.method != manifest.method ||
        existing.config != manifest.config ||
        existing.dataset_digest != manifest.dataset_digest ||
        existing.template_hashes != manifest.template_hashes) {
      throw ValidationError("run directory " + options.run_dir.string() +
                            " holds a different run (method, config, "
                            "templates or dataset changed); choose another "
                            "--run-id");
    }
    manifest.started = existing.started;
    manifest.finished = existing.finished;
  } else {
    manifest.started = UtcTimestamp();
    WriteManifest(manifest, manifest_path);
  }

  std::set<std::string> recorded;
  for (const auto& record : ReadRecords(records_path)) {
    if (dataset.Find(record.entry_id) == nullptr) {
      throw ValidationError("records.jsonl holds unknown id " + record.entry_id);
    }
    recorded.insert(record.entry_id);
  }

  std::vector<const EntailmentEntry*> pending;
  for (const auto& entry : dataset.entries) {
    if (!recorded.contains(entry.id)) pending.push_back(&entry);
  }

  RunStats stats;
  stats.entries = dataset.entries.size();
  stats.already_recorded = recorded.size();

  struct Outcome {
    std::optional<RunRecord> record;
    std::string error;
  };

  std::vector<std::pair<std::string, std::string>> errors;
  {
    std::ofstream out(records_path, std::ios::binary | std::ios::app);
    if (!out) throw Error("cannot open " + records_path.string());
    OrderedParallelFor(
        pending.size(), options.max_in_flight,
        [&](std::size_t i) {
          Outcome outcome;
          try {
            outcome.record =
                RunMethod(options.method, *pending[i], options.config, backend);
          } catch (const InvalidInputError&) {
            throw;
          } catch (const std::exception& e) {
            outcome.error = e.what();
          }
          return outcome;
        },
        [&](std::size_t i, Outcome outcome) {
          if (!outcome.record) {
            ++stats.failed;
            LogWarning("entry " + pending[i]->id + " failed: " + outcome.error);
            errors.emplace_back(pending[i]->id, outcome.error);
            return;
          }
          ++stats.processed;
          if (!outcome.record->flags.empty()) ++stats.flagged;
          out << RecordToJsonLine(*outcome.record) << '\n';
          out.flush();
          if (!out) throw Error("cannot append to " + records_path.string());
        });
  }

  if (errors.empty()) {
    std::filesystem::remove(errors_path);
  } else {
    std::ofstream err_out(errors_path, std::ios::binary | std::ios::trunc);
    for (const auto& [id, message] : errors) {
      err_out << id << '\t' << message << '\n';
    }
  }

  stats.finished = stats.failed == 0;
  if (stats.finished && !manifest.finished) {
    manifest.finished = UtcTimestamp();
    WriteManifest(manifest, manifest_path);
  }
  return stats;
}

}  // namespace eidi::cli
