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

#ifndef EIDI_PIPELINE_H_
#define EIDI_PIPELINE_H_

// The explicit inductive inference stages (typing, transformation,
// prediction), hypothesis attestation, and the two direct multiple-choice
// baselines.
//
// Soft failures (unparseable output) are resolved locally and reported
// through `flags`; backend failures (TransportError, ApiStatusError)
// propagate to the caller.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eidi/llm.h"
#include "eidi/types.h"

namespace eidi {

enum class ScoreRule {
  // P("A") read from the answer position's top-token distribution.
  kDistributionA,
  // Emitted token's own probability p: p for "A", 1 - p for "B".
  kComplementFallback,
};

enum class Method { kEntity, kType, kEidi };

std::string_view ToString(ScoreRule rule);
std::string_view ToString(Method method);
// Throw InvalidInputError on an unknown name.
ScoreRule ParseScoreRule(std::string_view name);
Method ParseMethod(std::string_view name);

struct PipelineConfig {
  std::size_t n_alternatives = 10;
  PrefixSize k;  // alternatives averaged into the aggregate; nullopt = all
  ScoreRule score_rule = ScoreRule::kDistributionA;
  bool fallback_to_original = true;
  // Send kPredictionInstruction as the system message of MCQ prompts.
  bool use_instruction = true;
  // Also label each entry's hypothesis as attested or not.
  bool attest = false;
  std::string model_name = "mock";
  int typing_max_tokens = 32;
  int tokens_per_fact = 32;
  int prediction_max_tokens = 5;

  friend bool operator==(const PipelineConfig&,
                         const PipelineConfig&) = default;
};

// Throws InvalidInputError unless n >= 1, 1 <= k <= n, and token budgets are
// positive.
void ValidateConfig(const PipelineConfig& config);

// Label used in reports: MCQ_entity, MCQ_type, EIDI_all, EIDI_<k>.
std::string MethodLabel(Method method, PrefixSize k);

inline constexpr std::string_view kFallbackType = "a thing";

// Strips one leading "a ", "an " or "the " (case-insensitive).
std::string StripArticle(std::string_view text);

// Uppercases and removes whitespace and punctuation: " A)" -> "A".
std::string NormalizeAnswer(std::string_view token);

// Parses "X | p | Y" (optionally preceded by an echoed "... ->") into the
// article-stripped pair (X, Y). Throws TypingParseError.
std::pair<std::string, std::string> ParseTypingCompletion(
    std::string_view completion);

// Parses "- a | b | c." lines, skipping malformed lines, the original
// premise and exact duplicates; keeps at most `n` in generation order.
std::vector<Triple> ParseAlternatives(std::string_view completion,
                                      const Triple& original, std::size_t n);

struct AnswerScore {
  double score = 0.5;
  std::string token;
  bool used_distribution = false;
};

// Scores the first answer-position token of `response`. Throws
// UnparseableAnswerError when it normalizes to neither "A" nor "B".
AnswerScore ScoreAnswer(const ChatResponse& response, ScoreRule rule);

// Throws TypingParseError when the completion has the wrong shape; callers
// normally substitute kFallbackType for both arguments.
TypedPremise TypePremise(const EntailmentEntry& entry, Backend& backend,
                         const PipelineConfig& config);

std::vector<Triple> GenerateAlternatives(const TypedPremise& typed,
                                         std::size_t n, Backend& backend,
                                         const PipelineConfig& config);

// Unparseable answers score 0.5 and add "unparseable_answer" to `flags`.
ScoredInquiry PredictInquiry(const Inquiry& inquiry, Backend& backend,
                             const PipelineConfig& config,
                             std::vector<std::string>* flags = nullptr);

// True iff the hypothesis alone scores >= 0.5.
bool AttestHypothesis(const EntailmentEntry& entry, Backend& backend,
                      const PipelineConfig& config,
                      std::vector<std::string>* flags = nullptr);

RunRecord RunEidi(const EntailmentEntry& entry, const PipelineConfig& config,
                  Backend& backend);

ScoredInquiry RunBaselineEntity(const EntailmentEntry& entry,
                                const PipelineConfig& config, Backend& backend,
                                std::vector<std::string>* flags = nullptr);

// nullopt (and a "missing_types" flag) when the entry has no sidecar types.
std::optional<ScoredInquiry> RunBaselineType(
    const EntailmentEntry& entry, const PipelineConfig& config,
    Backend& backend, std::vector<std::string>* flags = nullptr);

// The inquiry the type baseline scores: both arguments replaced by their
// sidecar types, following the entry's argument order.
Inquiry TypePlaceholderInquiry(const EntailmentEntry& entry);

// Runs one method on one entry and packages a RunRecord.
RunRecord RunMethod(Method method, const EntailmentEntry& entry,
                    const PipelineConfig& config, Backend& backend);

}  // namespace eidi

#endif  // EIDI_PIPELINE_H_
