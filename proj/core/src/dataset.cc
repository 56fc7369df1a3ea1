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

#include "eidi/dataset.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "eidi/errors.h"

namespace eidi {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Strips a trailing CR so CRLF files do not leak into the last field.
std::string_view ChompCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// "arg1,predicate,arg2"; the predicate may itself contain commas.
Triple ParseSentence(std::string_view text, std::size_t line_no) {
  const auto first = text.find(',');
  const auto last = text.rfind(',');
  if (first == std::string_view::npos || first == last) {
    throw ParseError("sentence '" + std::string(text) +
                         "' is not of the form arg1,predicate,arg2",
                     line_no);
  }
  Triple triple{std::string(Trim(text.substr(0, first))),
                std::string(Trim(text.substr(first + 1, last - first - 1))),
                std::string(Trim(text.substr(last + 1)))};
  try {
    ValidateTriple(triple);
  } catch (const InvalidInputError& e) {
    throw ParseError(e.what(), line_no);
  }
  return triple;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

SplitSpec MakeSpec(Bias bias, bool consistent) {
  if (bias == Bias::kAttestation) {
    return {consistent ? SplitName::kAttestationConsistent
                       : SplitName::kAttestationAdversarial,
            {}};
  }
  return {consistent ? SplitName::kFrequencyConsistent
                     : SplitName::kFrequencyAdversarial,
          {}};
}

}  // namespace

const EntailmentEntry* Dataset::Find(const std::string& id) const {
  for (const auto& entry : entries) {
    if (entry.id == id) return &entry;
  }
  return nullptr;
}

std::set<std::string> Dataset::Ids() const {
  std::set<std::string> ids;
  for (const auto& entry : entries) ids.insert(entry.id);
  return ids;
}

Dataset ParseLevyHolt(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseLevyHolt(in, path.string());
}

Dataset ParseLevyHolt(std::istream& in, const std::string& source_name) {
  Dataset dataset;
  dataset.source_path = source_name;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = ChompCr(raw);
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    EntailmentEntry entry;
    entry.id = std::to_string(line_no);
    entry.hypothesis = ParseSentence(fields[0], line_no);
    entry.premise = ParseSentence(fields[1], line_no);
    const std::string label = Lower(Trim(fields[2]));
    if (label == "true") {
      entry.gold = true;
    } else if (label == "false") {
      entry.gold = false;
    } else {
      throw ParseError("label must be True or False, got '" +
                           std::string(fields[2]) + "'",
                       line_no);
    }
    const Triple& p = entry.premise;
    const Triple& h = entry.hypothesis;
    if (h.subject == p.subject && h.object == p.object) {
      entry.order = ArgOrder::kAligned;
    } else if (h.subject == p.object && h.object == p.subject) {
      entry.order = ArgOrder::kSwapped;
    } else {
      throw ParseError("entry " + entry.id +
                           ": hypothesis arguments match neither the premise "
                           "order nor its swap",
                       line_no);
    }
    dataset.entries.push_back(std::move(entry));
  }
  return dataset;
}

void WriteLevyHolt(const Dataset& dataset, std::ostream& out) {
  auto sentence = [](const Triple& t) {
    if (t.subject.find(',') != std::string::npos ||
        t.object.find(',') != std::string::npos) {
      throw InvalidInputError("argument contains a comma: " + t.subject +
                              " / " + t.object);
    }
    return t.subject + "," + t.predicate + "," + t.object;
  };
  for (const auto& entry : dataset.entries) {
    out << sentence(entry.hypothesis) << '\t' << sentence(entry.premise)
        << '\t' << (entry.gold ? "True" : "False") << '\n';
  }
}

std::string ToString(SplitName name) {
  switch (name) {
    case SplitName::kAttestationConsistent:
      return "attestation-consistent";
    case SplitName::kAttestationAdversarial:
      return "attestation-adversarial";
    case SplitName::kFrequencyConsistent:
      return "frequency-consistent";
    case SplitName::kFrequencyAdversarial:
      return "frequency-adversarial";
  }
  return "unknown";
}

void ValidatePartition(const Dataset& dataset, const SplitPair& split) {
  const auto ids = dataset.Ids();
  for (const auto* spec : {&split.consistent, &split.adversarial}) {
    for (const auto& id : spec->member_ids) {
      if (!ids.contains(id)) {
        throw ValidationError("split " + ToString(spec->name) +
                              " names unknown id " + id);
      }
    }
  }
  for (const auto& id : split.consistent.member_ids) {
    if (split.adversarial.member_ids.contains(id)) {
      throw ValidationError("id " + id + " is in both subsets");
    }
  }
  for (const auto& id : ids) {
    if (!split.consistent.member_ids.contains(id) &&
        !split.adversarial.member_ids.contains(id)) {
      throw ValidationError("id " + id + " is in neither subset");
    }
  }
}

SplitPair ComputeAttestationSplit(const Dataset& dataset,
                                  const std::map<std::string, bool>& attested) {
  SplitPair split{MakeSpec(Bias::kAttestation, true),
                  MakeSpec(Bias::kAttestation, false)};
  for (const auto& entry : dataset.entries) {
    const auto it = attested.find(entry.id);
    if (it == attested.end()) {
      throw ValidationError("no attestation label for id " + entry.id);
    }
    (entry.gold == it->second ? split.consistent : split.adversarial)
        .member_ids.insert(entry.id);
  }
  return split;
}

SplitPair LoadSplitFile(const std::filesystem::path& path,
                        const Dataset& dataset, Bias bias) {
  auto in = OpenOrThrow(path);
  return ParseSplit(in, dataset, bias);
}

SplitPair ParseSplit(std::istream& in, const Dataset& dataset, Bias bias) {
  SplitPair split{MakeSpec(bias, true), MakeSpec(bias, false)};
  std::set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = ChompCr(raw);
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError("expected 'id<TAB>cons|adv'", line_no);
    }
    const std::string id(Trim(fields[0]));
    const std::string tag = Lower(Trim(fields[1]));
    if (!seen.insert(id).second) {
      throw ValidationError("duplicate id " + id + " in split file (line " +
                            std::to_string(line_no) + ")");
    }
    if (tag == "cons") {
      split.consistent.member_ids.insert(id);
    } else if (tag == "adv") {
      split.adversarial.member_ids.insert(id);
    } else {
      throw ParseError("unknown split tag '" + tag + "'", line_no);
    }
  }
  ValidatePartition(dataset, split);
  return split;
}

void LoadTypeSidecar(const std::filesystem::path& path, Dataset& dataset) {
  auto in = OpenOrThrow(path);
  ParseTypeSidecar(in, dataset);
}

void ParseTypeSidecar(std::istream& in, Dataset& dataset) {
  std::map<std::string, EntailmentEntry*> by_id;
  for (auto& entry : dataset.entries) by_id[entry.id] = &entry;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = ChompCr(raw);
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw ParseError("expected 'id<TAB>subject_type<TAB>object_type'",
                       line_no);
    }
    const std::string id(Trim(fields[0]));
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw ValidationError("type sidecar names unknown id " + id);
    }
    const auto subject_type = Trim(fields[1]);
    const auto object_type = Trim(fields[2]);
    if (subject_type.empty() || object_type.empty()) {
      throw ParseError("empty type label", line_no);
    }
    it->second->subject_type = std::string(subject_type);
    it->second->object_type = std::string(object_type);
  }
}

std::map<std::string, bool> LoadAttestationLabels(
    const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseAttestationLabels(in);
}

std::map<std::string, bool> ParseAttestationLabels(std::istream& in) {
  std::map<std::string, bool> labels;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = ChompCr(raw);
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 2) throw ParseError("expected 'id<TAB>true|false'", line_no);
    const std::string value = Lower(Trim(fields[1]));
    if (value != "true" && value != "false") {
      throw ParseError("attestation label must be true or false", line_no);
    }
    const std::string id(Trim(fields[0]));
    if (!labels.emplace(id, value == "true").second) {
      throw ValidationError("duplicate attestation label for id " + id);
    }
  }
  return labels;
}

void WriteAttestationLabels(
    const std::vector<std::pair<std::string, bool>>& labels,
    std::ostream& out) {
  for (const auto& [id, attested] : labels) {
    out << id << '\t' << (attested ? "true" : "false") << '\n';
  }
}

}  // namespace eidi
