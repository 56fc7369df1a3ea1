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

#include "eidi/llm.h"

#include "eidi/errors.h"
#include "eidi/hash.h"
#include "json_codec.h"

namespace eidi {

void ValidateRequest(const ChatRequest& request) {
  if (request.max_new_tokens <= 0) {
    throw InvalidInputError("max_new_tokens must be positive");
  }
  if (!(request.temperature >= 0.0)) {
    throw InvalidInputError("temperature must be non-negative");
  }
  if (request.user_prompt.empty()) {
    throw InvalidInputError("empty user prompt");
  }
}

void ValidateResponse(const ChatResponse& response) {
  auto check = [](double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidInputError("token probability outside [0,1]: " +
                              std::to_string(p));
    }
  };
  for (const auto& token : response.tokens) {
    check(token.probability);
    for (std::size_t i = 0; i < token.alternatives.size(); ++i) {
      check(token.alternatives[i].probability);
      if (i > 0 && token.alternatives[i].probability >
                       token.alternatives[i - 1].probability) {
        throw InvalidInputError("token alternatives not sorted descending");
      }
    }
  }
}

CountingBackend::CountingBackend(std::shared_ptr<Backend> inner)
    : inner_(std::move(inner)) {
  if (!inner_) throw InvalidInputError("CountingBackend needs a backend");
}

ChatResponse CountingBackend::Complete(const ChatRequest& request) {
  ++calls_;
  return inner_->Complete(request);
}

CacheKey MakeCacheKey(const ChatRequest& request) {
  return {Sha256Hex(RequestToJson(request))};
}

std::string RequestToJson(const ChatRequest& request) {
  return internal::ToJson(request).dump();
}

std::string ResponseToJson(const ChatResponse& response) {
  return internal::ToJson(response).dump();
}

ChatRequest RequestFromJson(const std::string& json) {
  try {
    return internal::RequestFrom(nlohmann::json::parse(json));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad request JSON: ") + e.what());
  }
}

ChatResponse ResponseFromJson(const std::string& json) {
  try {
    return internal::ResponseFrom(nlohmann::json::parse(json));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad response JSON: ") + e.what());
  }
}

}  // namespace eidi
