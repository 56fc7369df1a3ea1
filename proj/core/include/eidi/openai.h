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

#ifndef EIDI_OPENAI_H_
#define EIDI_OPENAI_H_

#include <chrono>
#include <functional>
#include <string>
#include <string_view>

#include "eidi/llm.h"

namespace eidi {

struct OpenAIOptions {
  // scheme://host[:port]; https needs the library built with OpenSSL.
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string api_key;
  int top_logprobs = 5;
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::seconds timeout{120};
  // Replaced in tests to avoid real sleeping.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Chat-completions client. Retries transport failures, 429 and 5xx with
// exponential backoff; any other non-200 status fails immediately with
// ApiStatusError.
class OpenAIBackend : public Backend {
 public:
  explicit OpenAIBackend(OpenAIOptions options);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string Describe() const override;

 private:
  OpenAIOptions options_;
};

// Request body: model, messages, temperature, max_tokens and, when token
// probabilities are wanted, logprobs + top_logprobs.
std::string BuildChatCompletionBody(const ChatRequest& request,
                                    int top_logprobs);

// Decodes a chat-completions response. Throws CapabilityError when token
// probabilities were wanted but the body carries none, ParseError on a body
// without choices[0].message.content.
ChatResponse ParseChatCompletionBody(std::string_view body,
                                     bool want_token_probs);

}  // namespace eidi

#endif  // EIDI_OPENAI_H_
