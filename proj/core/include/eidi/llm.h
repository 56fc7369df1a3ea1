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

#ifndef EIDI_LLM_H_
#define EIDI_LLM_H_

// Chat-completion backend abstraction. Implementations: MockBackend
// (mock.h), OpenAIBackend (openai.h) and CachedBackend (cache.h) which wraps
// either.

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eidi {

struct ChatRequest {
  std::optional<std::string> system_instruction;
  std::string user_prompt;
  int max_new_tokens = 16;
  double temperature = 0.0;  // greedy decoding
  bool want_token_probs = false;
  std::string model_name;

  friend bool operator==(const ChatRequest&, const ChatRequest&) = default;
};

// Throws InvalidInputError on a non-positive token budget, negative
// temperature or empty prompt.
void ValidateRequest(const ChatRequest& request);

struct TokenAlternative {
  std::string text;
  double probability = 0.0;

  friend bool operator==(const TokenAlternative&,
                         const TokenAlternative&) = default;
};

struct TokenProb {
  std::string text;
  double probability = 0.0;
  // Top alternatives at this position, sorted by descending probability.
  // Empty when the backend did not report a distribution.
  std::vector<TokenAlternative> alternatives;

  friend bool operator==(const TokenProb&, const TokenProb&) = default;
};

struct ChatResponse {
  std::string text;
  std::vector<TokenProb> tokens;  // empty unless token probs were requested

  friend bool operator==(const ChatResponse&, const ChatResponse&) = default;
};

// Throws InvalidInputError if a probability is outside [0, 1] or an
// alternatives list is not sorted descending.
void ValidateResponse(const ChatResponse& response);

class Backend {
 public:
  virtual ~Backend() = default;

  // Deterministic for fixed backend state. Safe to call concurrently.
  virtual ChatResponse Complete(const ChatRequest& request) = 0;

  // Short human-readable identity, e.g. "mock" or "openai:<url>".
  virtual std::string Describe() const = 0;
};

// Counts calls that reach the wrapped backend.
class CountingBackend : public Backend {
 public:
  explicit CountingBackend(std::shared_ptr<Backend> inner);
  ChatResponse Complete(const ChatRequest& request) override;
  std::string Describe() const override { return inner_->Describe(); }
  std::size_t calls() const { return calls_; }

 private:
  std::shared_ptr<Backend> inner_;
  std::atomic<std::size_t> calls_{0};
};

// Content address of a request: hex SHA-256 over its canonical JSON.
struct CacheKey {
  std::string digest;

  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

CacheKey MakeCacheKey(const ChatRequest& request);

// Canonical JSON encodings (sorted keys, no insignificant whitespace).
std::string RequestToJson(const ChatRequest& request);
std::string ResponseToJson(const ChatResponse& response);
ChatRequest RequestFromJson(const std::string& json);
ChatResponse ResponseFromJson(const std::string& json);

}  // namespace eidi

#endif  // EIDI_LLM_H_
