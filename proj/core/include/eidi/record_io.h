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

#ifndef EIDI_RECORD_IO_H_
#define EIDI_RECORD_IO_H_

// Persistence of run artifacts: RunRecords as JSON lines and the run
// manifest.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eidi/pipeline.h"
#include "eidi/types.h"

namespace eidi {

// One line, no trailing newline. Byte-stable for equal records.
std::string RecordToJsonLine(const RunRecord& record);
RunRecord RecordFromJsonLine(std::string_view line);

// Missing file reads as no records. Throws ParseError naming the bad line.
std::vector<RunRecord> ReadRecords(const std::filesystem::path& path);

struct RunManifest {
  std::string run_id;
  Method method = Method::kEidi;
  PipelineConfig config;
  std::string model_name;
  std::string dataset_path;
  std::string dataset_digest;
  std::size_t entry_count = 0;
  std::map<std::string, std::string> template_hashes;
  std::string backend;  // "live:<url>" or "mock:<scenario path>"
  std::string started;
  std::optional<std::string> finished;

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

std::string ManifestToJson(const RunManifest& manifest);
RunManifest ManifestFromJson(const std::string& json);
RunManifest ReadManifest(const std::filesystem::path& path);
// Atomic replace (temp file + rename).
void WriteManifest(const RunManifest& manifest,
                   const std::filesystem::path& path);

// Hashes of every template body, keyed by template name.
std::map<std::string, std::string> AllTemplateHashes();

}  // namespace eidi

#endif  // EIDI_RECORD_IO_H_
