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

#include "eidi/pipeline.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "eidi/errors.h"
#include "eidi/prompts.h"

namespace eidi {
namespace {

void AddFlag(std::vector<std::string>* flags, std::string flag) {
  if (flags == nullptr) return;
  if (std::find(flags->begin(), flags->end(), flag) == flags->end()) {
    flags->push_back(std::move(flag));
  }
}

std::string Lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string_view> Lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    const auto nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl == text.npos ? text.npos : nl - start));
    if (nl == text.npos) return lines;
    start = nl + 1;
  }
}

std::optional<Triple> SplitPipes(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.emplace_back(
        Trim(text.substr(start, bar == text.npos ? text.npos : bar - start)));
    if (bar == text.npos) break;
    start = bar + 1;
  }
  if (parts.size() != 3) return std::nullopt;
  for (const auto& part : parts) {
    if (part.empty() || part.find_first_of("\t\r\n") != std::string::npos) {
      return std::nullopt;
    }
  }
  return Triple{parts[0], parts[1], parts[2]};
}

// Leading list markers: "-", "*", "1.", "2)".
std::string_view StripListMarker(std::string_view line) {
  line = Trim(line);
  if (!line.empty() && (line.front() == '-' || line.front() == '*')) {
    return Trim(line.substr(1));
  }
  std::size_t digits = 0;
  while (digits < line.size() &&
         std::isdigit(static_cast<unsigned char>(line[digits]))) {
    ++digits;
  }
  if (digits > 0 && digits < line.size() &&
      (line[digits] == '.' || line[digits] == ')')) {
    return Trim(line.substr(digits + 1));
  }
  return line;
}

ChatRequest McqRequest(std::string prompt, const PipelineConfig& config) {
  ChatRequest request;
  if (config.use_instruction) {
    request.system_instruction = std::string(kPredictionInstruction);
  }
  request.user_prompt = std::move(prompt);
  request.max_new_tokens = config.prediction_max_tokens;
  request.temperature = 0.0;
  request.want_token_probs = true;
  request.model_name = config.model_name;
  return request;
}

// Shared by prediction and attestation.
AnswerScore ScoreMcq(std::string prompt, Backend& backend,
                     const PipelineConfig& config,
                     std::vector<std::string>* flags) {
  ChatRequest request = McqRequest(std::move(prompt), config);
  ChatResponse response;
  try {
    response = backend.Complete(request);
  } catch (const CapabilityError&) {
    request.want_token_probs = false;
    response = backend.Complete(request);
    AddFlag(flags, "no_token_probs");
  }
  try {
    AnswerScore answer = ScoreAnswer(response, config.score_rule);
    if (config.score_rule == ScoreRule::kDistributionA &&
        !answer.used_distribution) {
      AddFlag(flags, "no_distribution");
    }
    return answer;
  } catch (const UnparseableAnswerError&) {
    AddFlag(flags, "unparseable_answer");
    AnswerScore fallback;
    fallback.score = 0.5;
    fallback.token = response.tokens.empty() ? response.text
                                             : response.tokens.front().text;
    return fallback;
  }
}

}  // namespace

std::string_view ToString(ScoreRule rule) {
  return rule == ScoreRule::kDistributionA ? "distribution_a"
                                           : "complement_fallback";
}

std::string_view ToString(Method method) {
  switch (method) {
    case Method::kEntity:
      return "entity";
    case Method::kType:
      return "type";
    case Method::kEidi:
      return "eidi";
  }
  return "unknown";
}

ScoreRule ParseScoreRule(std::string_view name) {
  if (name == "distribution_a") return ScoreRule::kDistributionA;
  if (name == "complement_fallback") return ScoreRule::kComplementFallback;
  throw InvalidInputError("unknown score rule '" + std::string(name) + "'");
}

Method ParseMethod(std::string_view name) {
  if (name == "entity") return Method::kEntity;
  if (name == "type") return Method::kType;
  if (name == "eidi") return Method::kEidi;
  throw InvalidInputError("unknown method '" + std::string(name) +
                          "' (expected entity, type or eidi)");
}

void ValidateConfig(const PipelineConfig& config) {
  if (config.n_alternatives == 0) {
    throw InvalidInputError("n_alternatives must be positive");
  }
  if (config.k && (*config.k == 0 || *config.k > config.n_alternatives)) {
    throw InvalidInputError("k must be in [1, n_alternatives]");
  }
  if (config.typing_max_tokens <= 0 || config.tokens_per_fact <= 0 ||
      config.prediction_max_tokens <= 0) {
    throw InvalidInputError("token budgets must be positive");
  }
}

std::string MethodLabel(Method method, PrefixSize k) {
  switch (method) {
    case Method::kEntity:
      return "MCQ_entity";
    case Method::kType:
      return "MCQ_type";
    case Method::kEidi:
      return k ? "EIDI_" + std::to_string(*k) : "EIDI_all";
  }
  return "unknown";
}

std::string StripArticle(std::string_view text) {
  text = Trim(text);
  const std::string lower = Lower(text);
  for (std::string_view article : {"a ", "an ", "the "}) {
    if (lower.starts_with(article)) {
      return std::string(Trim(text.substr(article.size())));
    }
  }
  return std::string(text);
}

std::string NormalizeAnswer(std::string_view token) {
  std::string out;
  for (unsigned char c : token) {
    if (std::isspace(c) || std::ispunct(c)) continue;
    out.push_back(static_cast<char>(std::toupper(c)));
  }
  return out;
}

std::pair<std::string, std::string> ParseTypingCompletion(
    std::string_view completion) {
  for (std::string_view line : Lines(completion)) {
    line = Trim(line);
    if (line.empty()) continue;
    if (const auto arrow = line.rfind("->"); arrow != line.npos) {
      line = Trim(line.substr(arrow + 2));
    }
    const auto triple = SplitPipes(line);
    if (!triple) break;
    auto subject_type = StripArticle(triple->subject);
    auto object_type = StripArticle(triple->object);
    if (subject_type.empty() || object_type.empty()) break;
    return {std::move(subject_type), std::move(object_type)};
  }
  throw TypingParseError("typing completion is not 'X | p | Y': '" +
                         std::string(completion) + "'");
}

std::vector<Triple> ParseAlternatives(std::string_view completion,
                                      const Triple& original, std::size_t n) {
  std::vector<Triple> out;
  std::set<Triple> seen;
  for (std::string_view line : Lines(completion)) {
    if (out.size() >= n) break;
    line = StripListMarker(line);
    while (!line.empty() && line.back() == '.') line.remove_suffix(1);
    const auto triple = SplitPipes(line);
    if (!triple || *triple == original) continue;
    if (!seen.insert(*triple).second) continue;
    out.push_back(*triple);
  }
  return out;
}

AnswerScore ScoreAnswer(const ChatResponse& response, ScoreRule rule) {
  const TokenProb* answer = nullptr;
  for (const auto& token : response.tokens) {
    if (!NormalizeAnswer(token.text).empty()) {
      answer = &token;
      break;
    }
  }
  AnswerScore result;
  if (answer == nullptr) {
    // No probabilities at all: the emitted mark is taken as certain.
    const std::string text = NormalizeAnswer(response.text);
    const char mark = text.empty() ? '\0' : text.front();
    if (mark != 'A' && mark != 'B') {
      throw UnparseableAnswerError("answer '" + response.text +
                                   "' is neither A nor B");
    }
    result.token = std::string(1, mark);
    result.score = mark == 'A' ? 1.0 : 0.0;
    return result;
  }

  const std::string normalized = NormalizeAnswer(answer->text);
  const char mark = normalized.front();
  if (mark != 'A' && mark != 'B') {
    throw UnparseableAnswerError("answer token '" + answer->text +
                                 "' is neither A nor B");
  }
  result.token = answer->text;
  if (rule == ScoreRule::kDistributionA && !answer->alternatives.empty()) {
    double p_a = 0.0;
    for (const auto& alt : answer->alternatives) {
      const std::string alt_norm = NormalizeAnswer(alt.text);
      if (!alt_norm.empty() && alt_norm.front() == 'A') p_a += alt.probability;
    }
    result.score = std::clamp(p_a, 0.0, 1.0);
    result.used_distribution = true;
    return result;
  }
  result.score = mark == 'A' ? answer->probability : 1.0 - answer->probability;
  result.score = std::clamp(result.score, 0.0, 1.0);
  return result;
}

TypedPremise TypePremise(const EntailmentEntry& entry, Backend& backend,
                         const PipelineConfig& config) {
  ChatRequest request;
  request.user_prompt = RenderTypingPrompt(entry.premise);
  request.max_new_tokens = config.typing_max_tokens;
  request.model_name = config.model_name;
  const ChatResponse response = backend.Complete(request);
  auto [subject_type, object_type] = ParseTypingCompletion(response.text);
  return {entry.premise, std::move(subject_type), std::move(object_type)};
}

std::vector<Triple> GenerateAlternatives(const TypedPremise& typed,
                                         std::size_t n, Backend& backend,
                                         const PipelineConfig& config) {
  if (n == 0) throw InvalidInputError("n must be positive");
  ChatRequest request;
  request.user_prompt = RenderTransformationPrompt(typed, n);
  request.max_new_tokens =
      config.tokens_per_fact * static_cast<int>(n + 1);
  request.model_name = config.model_name;
  const ChatResponse response = backend.Complete(request);
  return ParseAlternatives(response.text, typed.base, n);
}

ScoredInquiry PredictInquiry(const Inquiry& inquiry, Backend& backend,
                             const PipelineConfig& config,
                             std::vector<std::string>* flags) {
  const AnswerScore answer =
      ScoreMcq(RenderPredictionPrompt(inquiry), backend, config, flags);
  ScoredInquiry scored;
  scored.inquiry = inquiry;
  scored.score = answer.score;
  scored.answer_token = answer.token;
  return scored;
}

bool AttestHypothesis(const EntailmentEntry& entry, Backend& backend,
                      const PipelineConfig& config,
                      std::vector<std::string>* flags) {
  const AnswerScore answer = ScoreMcq(RenderAttestationPrompt(entry.hypothesis),
                                      backend, config, flags);
  return answer.score >= 0.5;
}

RunRecord RunEidi(const EntailmentEntry& entry, const PipelineConfig& config,
                  Backend& backend) {
  ValidateConfig(config);
  RunRecord record;
  record.entry_id = entry.id;
  record.method = std::string(ToString(Method::kEidi));
  record.k = config.k;

  try {
    record.typed = TypePremise(entry, backend, config);
  } catch (const TypingParseError&) {
    record.typed = TypedPremise{entry.premise, std::string(kFallbackType),
                                std::string(kFallbackType)};
    AddFlag(&record.flags, "typing_fallback");
  }

  record.alternatives =
      GenerateAlternatives(*record.typed, config.n_alternatives, backend, config);
  for (std::size_t i = 0; i < record.alternatives.size(); ++i) {
    const Triple& alt = record.alternatives[i];
    ScoredInquiry scored =
        PredictInquiry(DeriveHypothesis(entry, alt.subject, alt.object),
                       backend, config, &record.flags);
    scored.source = ScoreSource::kAlternative;
    scored.alternative_index = i;
    record.scored.push_back(std::move(scored));
  }

  if (record.scored.empty()) {
    AddFlag(&record.flags, "no_alternatives");
    if (!config.fallback_to_original) {
      record.skipped = true;
      return record;
    }
    record.scored.push_back(
        PredictInquiry(OriginalInquiry(entry), backend, config, &record.flags));
  }
  record.aggregate = PrefixMean(record.scored, config.k);
  if (config.attest) {
    record.attested_hypothesis =
        AttestHypothesis(entry, backend, config, &record.flags);
  }
  return record;
}

ScoredInquiry RunBaselineEntity(const EntailmentEntry& entry,
                                const PipelineConfig& config, Backend& backend,
                                std::vector<std::string>* flags) {
  return PredictInquiry(OriginalInquiry(entry), backend, config, flags);
}

Inquiry TypePlaceholderInquiry(const EntailmentEntry& entry) {
  if (!entry.subject_type || !entry.object_type) {
    throw InvalidInputError("entry " + entry.id + " has no type annotation");
  }
  return DeriveHypothesis(entry, *entry.subject_type, *entry.object_type);
}

std::optional<ScoredInquiry> RunBaselineType(const EntailmentEntry& entry,
                                             const PipelineConfig& config,
                                             Backend& backend,
                                             std::vector<std::string>* flags) {
  if (!entry.subject_type || !entry.object_type) {
    AddFlag(flags, "missing_types");
    return std::nullopt;
  }
  return PredictInquiry(TypePlaceholderInquiry(entry), backend, config, flags);
}

RunRecord RunMethod(Method method, const EntailmentEntry& entry,
                    const PipelineConfig& config, Backend& backend) {
  if (method == Method::kEidi) return RunEidi(entry, config, backend);

  RunRecord record;
  record.entry_id = entry.id;
  record.method = std::string(ToString(method));
  std::optional<ScoredInquiry> scored;
  if (method == Method::kEntity) {
    scored = RunBaselineEntity(entry, config, backend, &record.flags);
  } else {
    scored = RunBaselineType(entry, config, backend, &record.flags);
  }
  if (!scored) {
    record.skipped = true;
    return record;
  }
  record.scored.push_back(std::move(*scored));
  record.aggregate = record.scored.front().score;
  if (config.attest) {
    record.attested_hypothesis =
        AttestHypothesis(entry, backend, config, &record.flags);
  }
  return record;
}

}  // namespace eidi
