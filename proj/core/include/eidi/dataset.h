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

#ifndef EIDI_DATASET_H_
#define EIDI_DATASET_H_

// Levy/Holt-format ingestion, bias-split files and type sidecars.
//
// Levy/Holt TSV: one entry per line, three tab-separated fields
//   hypothesis-sentence \t premise-sentence \t True|False
// where a sentence is "arg1,predicate,arg2". Entry ids are the 1-based
// physical line number in the source file.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eidi/types.h"

namespace eidi {

struct Dataset {
  std::vector<EntailmentEntry> entries;
  std::string source_path;

  // nullptr when absent.
  const EntailmentEntry* Find(const std::string& id) const;
  std::set<std::string> Ids() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

Dataset ParseLevyHolt(const std::filesystem::path& path);
Dataset ParseLevyHolt(std::istream& in, const std::string& source_name);

// Inverse of ParseLevyHolt for datasets whose ids are 1..n in order.
// Throws InvalidInputError if an argument contains a comma.
void WriteLevyHolt(const Dataset& dataset, std::ostream& out);

enum class Bias { kAttestation, kFrequency };

enum class SplitName {
  kAttestationConsistent,
  kAttestationAdversarial,
  kFrequencyConsistent,
  kFrequencyAdversarial,
};

std::string ToString(SplitName name);

struct SplitSpec {
  SplitName name;
  std::set<std::string> member_ids;
};

struct SplitPair {
  SplitSpec consistent;
  SplitSpec adversarial;
};

// Throws ValidationError unless the two subsets are disjoint, cover every
// dataset id and contain nothing else.
void ValidatePartition(const Dataset& dataset, const SplitPair& split);

// An entry is consistent iff its gold label equals the attestation label of
// its hypothesis. Throws ValidationError naming the first id without a label.
SplitPair ComputeAttestationSplit(const Dataset& dataset,
                                  const std::map<std::string, bool>& attested);

// Reads "id \t cons|adv" lines and validates the partition.
SplitPair LoadSplitFile(const std::filesystem::path& path,
                        const Dataset& dataset, Bias bias);
SplitPair ParseSplit(std::istream& in, const Dataset& dataset, Bias bias);

// Reads "id \t subject_type \t object_type" lines into the matching entries.
// Entries not listed keep no types. Unknown ids are a ValidationError.
void LoadTypeSidecar(const std::filesystem::path& path, Dataset& dataset);
void ParseTypeSidecar(std::istream& in, Dataset& dataset);

// Attestation labels file: "id \t true|false".
std::map<std::string, bool> LoadAttestationLabels(
    const std::filesystem::path& path);
std::map<std::string, bool> ParseAttestationLabels(std::istream& in);
void WriteAttestationLabels(
    const std::vector<std::pair<std::string, bool>>& labels,
    std::ostream& out);

}  // namespace eidi

#endif  // EIDI_DATASET_H_
