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

#ifndef EIDI_TYPES_H_
#define EIDI_TYPES_H_

// Domain model shared by every module: triples, entailment entries,
// inquiries and the per-entry run record.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eidi {

// (subject, predicate, object) surface strings. Opaque: no lemmatization or
// voice normalization is ever applied.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Throws InvalidInputError unless every field is non-empty after trimming and
// free of tab / line-break characters.
void ValidateTriple(const Triple& triple);

// Whether the hypothesis keeps the premise argument order (s,h,o) or swaps it
// (o,h,s).
enum class ArgOrder { kAligned, kSwapped };

std::string_view ToString(ArgOrder order);

struct EntailmentEntry {
  std::string id;
  Triple premise;
  Triple hypothesis;
  ArgOrder order = ArgOrder::kAligned;
  bool gold = false;
  // FIGER labels from a sidecar file, used by the type-placeholder baseline.
  std::optional<std::string> subject_type;
  std::optional<std::string> object_type;

  friend bool operator==(const EntailmentEntry&,
                         const EntailmentEntry&) = default;
};

// Throws InvalidInputError if the hypothesis arguments do not follow `order`.
void ValidateEntry(const EntailmentEntry& entry);

// Premise with LLM-assigned, open-vocabulary argument types.
struct TypedPremise {
  Triple base;
  std::string subject_type;
  std::string object_type;

  friend bool operator==(const TypedPremise&, const TypedPremise&) = default;
};

// One entailment question Q[premise |= hypothesis].
struct Inquiry {
  Triple premise;
  Triple hypothesis;

  friend bool operator==(const Inquiry&, const Inquiry&) = default;
};

// Builds the inquiry obtained by substituting the entry's arguments.
// Predicates are kept verbatim and the hypothesis follows entry.order.
// Throws InvalidInputError on an empty (after trimming) substitution.
Inquiry DeriveHypothesis(const EntailmentEntry& entry,
                         std::string_view new_subject,
                         std::string_view new_object);

// The entry's own premise/hypothesis pair.
Inquiry OriginalInquiry(const EntailmentEntry& entry);

enum class ScoreSource { kDirect, kAlternative };

struct ScoredInquiry {
  Inquiry inquiry;
  double score = 0.5;  // P(entailment) in [0, 1]
  std::string answer_token;
  ScoreSource source = ScoreSource::kDirect;
  std::size_t alternative_index = 0;  // meaningful for kAlternative only

  friend bool operator==(const ScoredInquiry&, const ScoredInquiry&) = default;
};

// Number of leading scores averaged into an aggregate; nullopt means all.
using PrefixSize = std::optional<std::size_t>;

// Arithmetic mean of the first min(k, size) scores, summed left to right.
// Throws InvalidInputError when the range is empty or k == 0.
double PrefixMean(std::span<const ScoredInquiry> scored, PrefixSize k);
double PrefixMean(std::span<const double> scores, PrefixSize k);

// Per-entry artifacts of one method run.
struct RunRecord {
  std::string entry_id;
  std::string method;  // "entity", "type" or "eidi"
  std::optional<TypedPremise> typed;
  std::vector<Triple> alternatives;  // generation order
  std::vector<ScoredInquiry> scored;
  PrefixSize k;
  double aggregate = 0.5;
  std::optional<bool> attested_hypothesis;
  // Soft failures ("typing_fallback", "unparseable_answer", ...).
  std::vector<std::string> flags;
  // Excluded from metrics (e.g. no type annotation for the type baseline).
  bool skipped = false;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// Whitespace trimming used throughout parsing.
std::string_view Trim(std::string_view text);

}  // namespace eidi

#endif  // EIDI_TYPES_H_
