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

#include "eidi/types.h"

#include <algorithm>

#include "eidi/errors.h"

namespace eidi {

std::string_view Trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto begin = text.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = text.find_last_not_of(kSpace);
  return text.substr(begin, end - begin + 1);
}

namespace {

void ValidateField(std::string_view field, std::string_view name) {
  if (Trim(field).empty()) {
    throw InvalidInputError("triple " + std::string(name) + " is empty");
  }
  if (field.find_first_of("\t\r\n") != std::string_view::npos) {
    throw InvalidInputError("triple " + std::string(name) +
                            " contains a tab or line break: '" +
                            std::string(field) + "'");
  }
}

}  // namespace

void ValidateTriple(const Triple& triple) {
  ValidateField(triple.subject, "subject");
  ValidateField(triple.predicate, "predicate");
  ValidateField(triple.object, "object");
}

std::string_view ToString(ArgOrder order) {
  return order == ArgOrder::kAligned ? "aligned" : "swapped";
}

void ValidateEntry(const EntailmentEntry& entry) {
  ValidateTriple(entry.premise);
  ValidateTriple(entry.hypothesis);
  const Triple& p = entry.premise;
  const Triple& h = entry.hypothesis;
  const bool ok = entry.order == ArgOrder::kAligned
                      ? h.subject == p.subject && h.object == p.object
                      : h.subject == p.object && h.object == p.subject;
  if (!ok) {
    throw InvalidInputError("entry " + entry.id +
                            ": hypothesis arguments do not follow the " +
                            std::string(ToString(entry.order)) + " order");
  }
}

Inquiry DeriveHypothesis(const EntailmentEntry& entry,
                         std::string_view new_subject,
                         std::string_view new_object) {
  if (Trim(new_subject).empty() || Trim(new_object).empty()) {
    throw InvalidInputError("entry " + entry.id +
                            ": empty substitution argument");
  }
  Inquiry inquiry;
  inquiry.premise = {std::string(new_subject), entry.premise.predicate,
                     std::string(new_object)};
  if (entry.order == ArgOrder::kAligned) {
    inquiry.hypothesis = {std::string(new_subject), entry.hypothesis.predicate,
                          std::string(new_object)};
  } else {
    inquiry.hypothesis = {std::string(new_object), entry.hypothesis.predicate,
                          std::string(new_subject)};
  }
  return inquiry;
}

Inquiry OriginalInquiry(const EntailmentEntry& entry) {
  return {entry.premise, entry.hypothesis};
}

double PrefixMean(std::span<const double> scores, PrefixSize k) {
  if (scores.empty()) throw InvalidInputError("mean of an empty score list");
  if (k && *k == 0) throw InvalidInputError("prefix size must be positive");
  const std::size_t n = k ? std::min(*k, scores.size()) : scores.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += scores[i];
  return sum / static_cast<double>(n);
}

double PrefixMean(std::span<const ScoredInquiry> scored, PrefixSize k) {
  std::vector<double> scores;
  scores.reserve(scored.size());
  for (const auto& s : scored) scores.push_back(s.score);
  return PrefixMean(std::span<const double>(scores), k);
}

}  // namespace eidi
