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

#ifndef EIDI_MOCK_H_
#define EIDI_MOCK_H_

// Deterministic offline backend that behaves like an LLM with attestation
// bias: it answers an entailment question "A" (True) with probability `bias`
// when the hypothesis is one of its attested facts and "B" otherwise,
// ignoring the premise. It also answers the typing and transformation
// prompts from lookup tables.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eidi/llm.h"
#include "eidi/types.h"

namespace eidi {

struct MockWorld {
  std::set<Triple> attested_facts;
  std::map<Triple, std::pair<std::string, std::string>> typing_table;
  std::map<Triple, std::vector<Triple>> alternatives_table;
  std::pair<std::string, std::string> default_types{"thing", "thing"};
  std::uint64_t noise_seed = 0;
  double bias = 0.95;
  double jitter = 0.02;  // half-width of the per-inquiry perturbation
  bool supports_token_probs = true;

  friend bool operator==(const MockWorld&, const MockWorld&) = default;
};

// Lowercased, whitespace-collapsed "s p o" sentence. Two triples that render
// to the same question clause share a canonical fact.
std::string CanonicalFact(const Triple& triple);
std::string CanonicalSentence(std::string_view sentence);

std::string MockWorldToJson(const MockWorld& world);
MockWorld MockWorldFromJson(const std::string& json);
MockWorld LoadMockWorld(const std::filesystem::path& path);
void SaveMockWorld(const MockWorld& world, const std::filesystem::path& path);

class MockBackend : public Backend {
 public:
  explicit MockBackend(MockWorld world);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string Describe() const override { return "mock"; }

  // Number of Complete calls served so far.
  std::size_t calls() const { return calls_; }

  // The probability the mock assigns to its chosen answer for this prompt.
  double AnswerProbability(std::string_view user_prompt) const;

  const MockWorld& world() const { return world_; }

 private:
  ChatResponse AnswerTyping(const ChatRequest& request) const;
  ChatResponse AnswerTransformation(const ChatRequest& request) const;
  ChatResponse AnswerQuestion(const ChatRequest& request,
                              std::string_view clause) const;

  MockWorld world_;
  std::set<std::string> attested_sentences_;
  std::atomic<std::size_t> calls_{0};
};

}  // namespace eidi

#endif  // EIDI_MOCK_H_
